#include "omegabound/bounds.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "omegabound/errors.hpp"
#include "omegabound/valuations.hpp"

namespace omegabound {

namespace c = constants;

namespace {

void require_at_least(std::uint64_t n, std::uint64_t min, const char* what) {
  if (n < min) {
    throw DomainError(std::string(what) + ": n=" + std::to_string(n) + " below " + std::to_string(min));
  }
}

double as_real(std::uint64_t n) { return static_cast<double>(n); }

double loglog(double x) { return std::log(std::log(x)); }

}  // namespace

Interval vp_bounds(std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("vp_bounds: p=" + std::to_string(p) + " is not prime");
  if (p > n) throw DomainError("vp_bounds: p=" + std::to_string(p) + " exceeds n=" + std::to_string(n));
  const double x = as_real(n);
  const double q = as_real(p);
  return {(x - q) / (q - 1.0) - std::log(x) / std::log(q), (x - 1.0) / (q - 1.0)};
}

double pi_upper_bound(double x) {
  if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("pi_upper_bound: requires x > 1");
  const double L = std::log(x);
  return x / L * (1.0 + c::kPiUpper / L);
}

ThetaEnvelopes theta_error_envelopes(double x) {
  if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("theta_error_envelopes: requires x > 1");
  const double L = std::log(x);
  const double L2 = L * L;
  return {c::kThetaFirstNumerator * x / (c::kThetaFirstDenominator * L2), c::kThetaSecond * x / (L2 * L2)};
}

Interval reciprocal_sum_band(std::uint64_t n) {
  require_at_least(n, 3, "reciprocal_sum_band");
  const double centre = loglog(as_real(n - 1));
  return {centre - c::kReciprocalBandLowerC, centre + c::kReciprocalBandUpperC};
}

double reciprocal_sum_refined_lower(std::uint64_t n) {
  require_at_least(n, 2, "reciprocal_sum_refined_lower");
  const double x = as_real(n);
  const double L = std::log(x);
  const double L5 = L * L * L * L * L;
  return loglog(x) + c::kReciprocalRefinedLowerA + x / ((x - 1.0) * L) - c::kThetaSecond * x / ((x - 1.0) * L5);
}

double reciprocal_sum_upper_tail(std::uint64_t n) {
  require_at_least(n, 2, "reciprocal_sum_upper_tail");
  const double x = as_real(n);
  const double L = std::log(x);
  const double L5 = L * L * L * L * L;
  return c::kReciprocalRefinedUpperB + x / ((x - 1.0) * L) + c::kThetaSecond * x / ((x - 1.0) * L5);
}

double reciprocal_sum_refined_upper(std::uint64_t n) {
  require_at_least(n, 3, "reciprocal_sum_refined_upper");
  return loglog(as_real(n - 1)) + reciprocal_sum_upper_tail(n);
}

MainAndEnvelope inverse_log_sum_estimate(std::uint64_t n) {
  require_at_least(n, 2, "inverse_log_sum_estimate");
  const double x = as_real(n);
  const double L = std::log(x);
  const double L2 = L * L;
  const double L4 = L2 * L2;
  return {x / L2 + 2.0 * x / (L2 * L) + 6.0 * x / L4, c::kInverseLogEnvelope * x / (L4 * L)};
}

double inverse_log_lower_excess(std::uint64_t n) {
  require_at_least(n, 2, "inverse_log_lower_excess");
  const double x = as_real(n);
  const double L = std::log(x);
  const double L5 = L * L * L * L * L;
  return c::kInverseLogLowerFifth * x / L5 - c::kThetaSecond * x / (L5 * L) + c::kInverseLogRefinedLowerA;
}

double inverse_log_upper_excess(std::uint64_t n) {
  require_at_least(n, 2, "inverse_log_upper_excess");
  const double x = as_real(n);
  const double L = std::log(x);
  const double L5 = L * L * L * L * L;
  return c::kInverseLogUpperFifth * x / L5 + c::kThetaSecond * x / (L5 * L) + c::kInverseLogRefinedUpperB;
}

double inverse_log_sum_refined_lower(std::uint64_t n) {
  require_at_least(n, c::kInverseLogLowerThreshold, "inverse_log_sum_refined_lower");
  return inverse_log_sum_estimate(n).main + inverse_log_lower_excess(n);
}

double inverse_log_sum_refined_upper(std::uint64_t n) {
  require_at_least(n, 2, "inverse_log_sum_refined_upper");
  return inverse_log_sum_estimate(n).main + inverse_log_upper_excess(n);
}

double r_envelope(std::uint64_t n) {
  require_at_least(n, 2, "r_envelope");
  const double x = as_real(n);
  const double L = std::log(x);
  const double L2 = L * L;
  return 2.0 * x / L + c::kCorrectionSecondOrder * x / L2 + 6.0 * x / (L2 * L) +
         c::kInverseLogEnvelope * x / (L2 * L2);
}

Band main_theorem_band(std::uint64_t n) {
  require_at_least(n, 3, "main_theorem_band");
  const double m = as_real(n - 1);
  return {m * loglog(m), c::kMainTheoremWidth * m};
}

double hardy_ramanujan_main(std::uint64_t n, bool allow_small) {
  require_at_least(n, allow_small ? 2 : 3, "hardy_ramanujan_main");
  const double x = as_real(n);
  return x * loglog(x) + c::kHardyRamanujanM * x;
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log_gamma: requires finite x > 0");
  // B_{2k} / (2k (2k-1)) for k = 1..8.
  static constexpr std::array<double, 8> kStirling = {
      1.0 / 12.0,          -1.0 / 360.0,  1.0 / 1260.0, -1.0 / 1680.0,
      1.0 / 1188.0,        -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0,
  };
  double shift_product = 1.0;
  while (x < 15.0) {
    shift_product *= x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double power = inv;
  for (const double coeff : kStirling) {
    series += coeff * power;
    power *= inv2;
  }
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (x - 0.5) * std::log(x) - x + half_log_two_pi + series - std::log(shift_product);
}

double inverse_gamma(double y) {
  if (!(y >= 2.0) || !std::isfinite(y)) throw DomainError("inverse_gamma: requires finite y >= 2");
  const double target = std::log(y);
  double lo = 2.0;
  double hi = 4.0;
  while (log_gamma(hi) < target) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    (log_gamma(mid) < target ? lo : hi) = mid;
  }
  return std::abs(log_gamma(lo) - target) <= std::abs(log_gamma(hi) - target) ? lo : hi;
}

Band omega_gamma_band(double y) {
  const double g = inverse_gamma(y);
  const double m = g - 2.0;
  if (!(m > 1.0)) throw DomainError("omega_gamma_band: requires inverse_gamma(y) - 2 > 1");
  return {m * loglog(m), c::kMainTheoremWidth * m};
}

}  // namespace omegabound
