#pragma once

#include <cstdint>

namespace omegabound {

/// Constants exactly as printed in the source; the "≈" decimals are taken as definitions.
namespace constants {

inline constexpr double kHardyRamanujanM = 1.0346538818;

// Σ_{p<=n} 1/(p-1): refined two-sided estimate and the coarse band built from it.
inline constexpr double kReciprocalRefinedLowerA = -11.86870152;
inline constexpr double kReciprocalRefinedUpperB = 21.18095291;
inline constexpr double kReciprocalBandLowerC = 14.0;
inline constexpr double kReciprocalBandUpperC = 23.0;

// Σ_{p<=n} 1/log p.
inline constexpr double kInverseLogRefinedLowerA = -16.42613005;
inline constexpr double kInverseLogRefinedUpperB = 30.52238614;
inline constexpr double kInverseLogEnvelope = 271382.0;
inline constexpr double kInverseLogLowerFifth = 1607.0 / 100.0;
inline constexpr double kInverseLogUpperFifth = 54281.0 / 800.0;

// θ(x): 200 log²x |θ(x) - x| < 793 x and log⁴x |θ(x) - x| < 1717433 x.
inline constexpr double kThetaFirstNumerator = 793.0;
inline constexpr double kThetaFirstDenominator = 200.0;
inline constexpr double kThetaSecond = 1717433.0;

// π(x) <= x/log x (1 + 1.2762/log x).
inline constexpr double kPiUpper = 1.2762;

inline constexpr double kMainTheoremWidth = 23.0;
// 1.2762 from the π bound plus 2 from the Σ 1/log p main term.
inline constexpr double kCorrectionSecondOrder = 3.2762;
// ℛ(n) < 9(n - 1) is what turns the 14 of the band into 23.
inline constexpr double kCorrectionTarget = 9.0;

inline constexpr std::uint64_t kReciprocalLowerThreshold = 3'564'183;
inline constexpr std::uint64_t kReciprocalUpperThreshold = 7'126'157;
inline constexpr std::uint64_t kInverseLogLowerThreshold = 564;
inline constexpr std::uint64_t kInverseLogUpperThreshold = 569;
inline constexpr std::uint64_t kCorrectionThreshold = 563'206;
inline constexpr std::uint64_t kPrimeBandScanLimit = 8'000'000;

}  // namespace constants

struct Interval {
  double lower;
  double upper;
};

/// Symmetric band centre ∓ half_width.
struct Band {
  double centre;
  double half_width;

  [[nodiscard]] double lower() const noexcept { return centre - half_width; }
  [[nodiscard]] double upper() const noexcept { return centre + half_width; }
};

/// Bounds on v_p(n!): (n-p)/(p-1) - log n/log p < v_p(n!) <= (n-1)/(p-1).
Interval vp_bounds(std::uint64_t n, std::uint64_t p);

/// x/log x (1 + 1.2762/log x), an upper bound for π(x) when x > 1.
double pi_upper_bound(double x);

struct ThetaEnvelopes {
  double first;   // 793 x / (200 log²x)
  double second;  // 1717433 x / log⁴x
};

ThetaEnvelopes theta_error_envelopes(double x);

/// loglog(n-1) - 14 < Σ_{p<=n} 1/(p-1) < loglog(n-1) + 23, n >= 3.
Interval reciprocal_sum_band(std::uint64_t n);

/// loglog n + a + n/((n-1) log n) - 1717433 n/((n-1) log⁵n), n >= 2.
double reciprocal_sum_refined_lower(std::uint64_t n);

/// loglog(n-1) + reciprocal_sum_upper_tail(n), n >= 3.
double reciprocal_sum_refined_upper(std::uint64_t n);

/// b + n/((n-1) log n) + 1717433 n/((n-1) log⁵n); below 23 from n = 7126157 on.
double reciprocal_sum_upper_tail(std::uint64_t n);

struct MainAndEnvelope {
  double main;      // n/log²n + 2n/log³n + 6n/log⁴n
  double envelope;  // 271382 n/log⁵n
};

/// Estimate of Σ_{p<=n} 1/log p, n >= 2.
MainAndEnvelope inverse_log_sum_estimate(std::uint64_t n);

/// main + inverse_log_lower_excess(n), valid from n = 564.
double inverse_log_sum_refined_lower(std::uint64_t n);

/// main + inverse_log_upper_excess(n), n >= 2.
double inverse_log_sum_refined_upper(std::uint64_t n);

/// 1607n/(100 log⁵n) - 1717433n/log⁶n + a.
double inverse_log_lower_excess(std::uint64_t n);

/// 54281n/(800 log⁵n) + 1717433n/log⁶n + b.
double inverse_log_upper_excess(std::uint64_t n);

/// 2n/log n + 3.2762n/log²n + 6n/log³n + 271382n/log⁴n, an upper estimate of
/// ℛ(n) = π(n) + log n Σ_{p<=n} 1/log p.
double r_envelope(std::uint64_t n);

/// (n-1) loglog(n-1) ∓ 23(n-1), n >= 3.
Band main_theorem_band(std::uint64_t n);

/// n loglog n + M' n. n >= 3 unless allow_small is set (n = 2 has negative loglog).
double hardy_ramanujan_main(std::uint64_t n, bool allow_small = false);

/// log Γ(x) for x > 0 from the Stirling series after shifting x above 15.
/// Relative error of Γ stays below 1e-13 on x >= 2.
double log_gamma(double x);

/// x >= 2 with Γ(x) = y, by bisection on log Γ. Requires y >= 2.
double inverse_gamma(double y);

/// Band (g-2) loglog(g-2) ∓ 23(g-2), g = Γ⁻¹(y); requires g - 2 > 1.
Band omega_gamma_band(double y);

}  // namespace omegabound
