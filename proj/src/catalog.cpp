#include "omegabound/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "omegabound/bounds.hpp"
#include "omegabound/errors.hpp"
#include "omegabound/valuations.hpp"

namespace omegabound {

namespace c = constants;

std::string_view to_string(CheckClass cls) noexcept {
  switch (cls) {
    case CheckClass::pass:
      return "pass";
    case CheckClass::marginal:
      return "marginal";
    case CheckClass::fail:
      return "fail";
  }
  return "fail";
}

CheckClass parse_check_class(std::string_view text) {
  if (text == "pass") return CheckClass::pass;
  if (text == "marginal") return CheckClass::marginal;
  if (text == "fail") return CheckClass::fail;
  throw std::invalid_argument("unknown check class '" + std::string(text) + "'");
}

CheckClass classify(double margin, double lhs, double rhs, double eps_rel, bool strict) noexcept {
  if (std::isnan(margin)) return CheckClass::fail;
  const double eps = eps_rel * std::max({std::abs(lhs), std::abs(rhs), 1.0});
  if (margin < -eps) return CheckClass::fail;
  if (strict) return margin <= eps ? CheckClass::marginal : CheckClass::pass;
  return margin < 0.0 ? CheckClass::marginal : CheckClass::pass;
}

CheckRecord Comparison::evaluate(const PointContext& ctx, double eps_rel) const {
  CheckRecord r;
  r.n = ctx.n;
  r.lhs = lhs(ctx);
  r.rhs = rhs(ctx);
  r.margin = orientation == Orientation::upper ? r.rhs - r.lhs : r.lhs - r.rhs;
  r.cls = classify(r.margin, r.lhs, r.rhs, eps_rel, strict);
  return r;
}

namespace {

using Evaluator = std::function<double(const PointContext&)>;

double real_n(const PointContext& ctx) { return static_cast<double>(ctx.n); }

BoundSpec simple(std::string_view id, std::string_view description, std::uint64_t domain_min,
                 Orientation orientation, bool strict, Evaluator lhs, Evaluator rhs) {
  BoundSpec spec;
  spec.id = id;
  spec.description = description;
  spec.domain_min = domain_min;
  spec.orientation = orientation;
  spec.strict = strict;
  Comparison cmp{orientation, strict, std::move(lhs), std::move(rhs)};
  spec.check = [cmp = std::move(cmp)](const PointContext& ctx, double eps_rel) {
    return cmp.evaluate(ctx, eps_rel);
  };
  return spec;
}

int severity(CheckClass cls) {
  switch (cls) {
    case CheckClass::pass:
      return 0;
    case CheckClass::marginal:
      return 1;
    case CheckClass::fail:
      return 2;
  }
  return 2;
}

bool worse(const CheckRecord& a, const CheckRecord& b) {
  if (severity(a.cls) != severity(b.cls)) return severity(a.cls) > severity(b.cls);
  return a.margin < b.margin;
}

// Worst of the two sides over every prime p <= n:
//   (n-p)/(p-1) - log n/log p < v_p(n!)   strict
//   v_p(n!) <= (n-1)/(p-1)                 non-strict, compared on exact integers
CheckRecord vp_sandwich(const PointContext& ctx, double eps_rel) {
  const std::uint64_t n = ctx.n;
  CheckRecord worst;
  bool first = true;
  for (const std::uint64_t p : ctx.primes) {
    if (p > n) break;
    const std::uint64_t v = legendre_valuation_of_prime(n, p);
    const double value = static_cast<double>(v);
    const Interval b = vp_bounds(n, p);

    CheckRecord upper;
    upper.n = n;
    upper.lhs = value;
    upper.rhs = b.upper;
    const auto slack = static_cast<std::int64_t>(n - 1) - static_cast<std::int64_t>(v * (p - 1));
    upper.margin = static_cast<double>(slack) / static_cast<double>(p - 1);
    upper.cls = classify(upper.margin, upper.lhs, upper.rhs, eps_rel, false);

    CheckRecord lower;
    lower.n = n;
    lower.lhs = value;
    lower.rhs = b.lower;
    lower.margin = value - b.lower;
    lower.cls = classify(lower.margin, lower.lhs, lower.rhs, eps_rel, true);

    for (const auto* r : {&upper, &lower}) {
      if (first || worse(*r, worst)) {
        worst = *r;
        first = false;
      }
    }
  }
  return worst;
}

// lhs and rhs of omega-gamma-band both need the band at the same n.
Band gamma_band_at(double y) {
  thread_local double last_y = 0.0;
  thread_local Band last_band{0.0, 0.0};
  if (y != last_y) {
    last_band = omega_gamma_band(y);
    last_y = y;
  }
  return last_band;
}

std::vector<BoundSpec> make_catalog() {
  using O = Orientation;
  std::vector<BoundSpec> out;

  {
    BoundSpec spec;
    spec.id = "vp-sandwich";
    spec.description = "(n-p)/(p-1) - log n/log p < v_p(n!) <= (n-1)/(p-1) for every prime p <= n";
    spec.domain_min = 2;
    spec.strict = false;
    spec.orientation = O::upper;
    spec.needs_prime_list = true;
    spec.check = vp_sandwich;
    out.push_back(std::move(spec));
  }

  out.push_back(simple(
      "pi-upper", "pi(n) <= n/log n (1 + 1.2762/log n)", 2, O::upper, false,
      [](const PointContext& ctx) { return static_cast<double>(ctx.sums.pi); },
      [](const PointContext& ctx) { return pi_upper_bound(real_n(ctx)); }));

  out.push_back(simple(
      "theta-env1", "|theta(n) - n| < 793 n / (200 log^2 n)", 2, O::upper, true,
      [](const PointContext& ctx) { return std::abs(ctx.sums.theta - real_n(ctx)); },
      [](const PointContext& ctx) { return theta_error_envelopes(real_n(ctx)).first; }));

  out.push_back(simple(
      "theta-env2", "|theta(n) - n| < 1717433 n / log^4 n", 2, O::upper, true,
      [](const PointContext& ctx) { return std::abs(ctx.sums.theta - real_n(ctx)); },
      [](const PointContext& ctx) { return theta_error_envelopes(real_n(ctx)).second; }));

  out.push_back(simple(
      "prop1-band-lower", "sum_{p<=n} 1/(p-1) > loglog(n-1) - 14", 3, O::lower, true,
      [](const PointContext& ctx) { return ctx.sums.sum_inv_pm1; },
      [](const PointContext& ctx) { return reciprocal_sum_band(ctx.n).lower; }));

  {
    auto spec = simple(
        "prop1-band-upper", "sum_{p<=n} 1/(p-1) < loglog(n-1) + 23", 3, O::upper, true,
        [](const PointContext& ctx) { return ctx.sums.sum_inv_pm1; },
        [](const PointContext& ctx) { return reciprocal_sum_band(ctx.n).upper; });
    spec.primes_only_eligible = true;
    out.push_back(std::move(spec));
  }

  {
    auto spec = simple(
        "prop1-refined-lower",
        "sum_{p<=n} 1/(p-1) > loglog n + a + n/((n-1) log n) - 1717433 n/((n-1) log^5 n)", 2, O::lower,
        true, [](const PointContext& ctx) { return ctx.sums.sum_inv_pm1; },
        [](const PointContext& ctx) { return reciprocal_sum_refined_lower(ctx.n); });
    spec.threshold = ThresholdComparison{
        c::kReciprocalLowerThreshold, 3,
        Comparison{O::lower, true, [](const PointContext& ctx) { return reciprocal_sum_refined_lower(ctx.n); },
                   [](const PointContext& ctx) { return reciprocal_sum_band(ctx.n).lower; }}};
    out.push_back(std::move(spec));
  }

  {
    auto spec = simple(
        "prop1-refined-upper",
        "sum_{p<=n} 1/(p-1) < loglog(n-1) + b + n/((n-1) log n) + 1717433 n/((n-1) log^5 n)", 3,
        O::upper, true, [](const PointContext& ctx) { return ctx.sums.sum_inv_pm1; },
        [](const PointContext& ctx) { return reciprocal_sum_refined_upper(ctx.n); });
    spec.threshold = ThresholdComparison{
        c::kReciprocalUpperThreshold, 2,
        Comparison{O::upper, true, [](const PointContext& ctx) { return reciprocal_sum_upper_tail(ctx.n); },
                   [](const PointContext&) { return c::kReciprocalBandUpperC; }}};
    out.push_back(std::move(spec));
  }

  out.push_back(simple(
      "prop2-envelope", "|sum_{p<=n} 1/log p - (n/log^2 n + 2n/log^3 n + 6n/log^4 n)| < 271382 n/log^5 n", 2,
      O::upper, true,
      [](const PointContext& ctx) {
        return std::abs(ctx.sums.sum_inv_logp - inverse_log_sum_estimate(ctx.n).main);
      },
      [](const PointContext& ctx) { return inverse_log_sum_estimate(ctx.n).envelope; }));

  {
    auto spec = simple(
        "prop2-refined-lower", "sum_{p<=n} 1/log p > main + 1607n/(100 log^5 n) - 1717433n/log^6 n + a",
        c::kInverseLogLowerThreshold, O::lower, true,
        [](const PointContext& ctx) { return ctx.sums.sum_inv_logp; },
        [](const PointContext& ctx) { return inverse_log_sum_refined_lower(ctx.n); });
    spec.threshold = ThresholdComparison{
        c::kInverseLogLowerThreshold, 2,
        Comparison{O::lower, true, [](const PointContext& ctx) { return inverse_log_lower_excess(ctx.n); },
                   [](const PointContext& ctx) { return -inverse_log_sum_estimate(ctx.n).envelope; }}};
    out.push_back(std::move(spec));
  }

  {
    auto spec = simple(
        "prop2-refined-upper", "sum_{p<=n} 1/log p < main + 54281n/(800 log^5 n) + 1717433n/log^6 n + b", 2,
        O::upper, true, [](const PointContext& ctx) { return ctx.sums.sum_inv_logp; },
        [](const PointContext& ctx) { return inverse_log_sum_refined_upper(ctx.n); });
    spec.threshold = ThresholdComparison{
        c::kInverseLogUpperThreshold, 2,
        Comparison{O::upper, true, [](const PointContext& ctx) { return inverse_log_upper_excess(ctx.n); },
                   [](const PointContext& ctx) { return inverse_log_sum_estimate(ctx.n).envelope; }}};
    out.push_back(std::move(spec));
  }

  {
    Comparison cmp{O::upper, true, [](const PointContext& ctx) { return r_envelope(ctx.n); },
                   [](const PointContext& ctx) { return c::kCorrectionTarget * static_cast<double>(ctx.n - 1); }};
    auto spec = simple("r-envelope-vs-9n",
                       "2n/log n + 3.2762n/log^2 n + 6n/log^3 n + 271382n/log^4 n < 9(n-1)",
                       c::kCorrectionThreshold, O::upper, true, cmp.lhs, cmp.rhs);
    spec.needs_sieve = false;
    spec.threshold = ThresholdComparison{c::kCorrectionThreshold, 2, std::move(cmp)};
    out.push_back(std::move(spec));
  }

  out.push_back(simple(
      "main-theorem", "|sum_{k<=n} Omega(k) - (n-1) loglog(n-1)| < 23(n-1)", 3, O::upper, true,
      [](const PointContext& ctx) {
        return std::abs(static_cast<double>(ctx.omega_prefix) - main_theorem_band(ctx.n).centre);
      },
      [](const PointContext& ctx) { return main_theorem_band(ctx.n).half_width; }));

  out.push_back(simple(
      "omega-gamma-band", "|Omega(n) - (g-2) loglog(g-2)| < 23(g-2), g = inverse gamma of n", 3, O::upper, true,
      [](const PointContext& ctx) {
        return std::abs(static_cast<double>(ctx.omega) - gamma_band_at(real_n(ctx)).centre);
      },
      [](const PointContext& ctx) { return gamma_band_at(real_n(ctx)).half_width; }));

  return out;
}

}  // namespace

const std::vector<BoundSpec>& bound_catalog() {
  static const std::vector<BoundSpec> catalog = make_catalog();
  return catalog;
}

const BoundSpec& find_bound(std::string_view id) {
  for (const auto& spec : bound_catalog()) {
    if (spec.id == id) return spec;
  }
  throw CatalogError("unknown bound '" + std::string(id) + "'");
}

}  // namespace omegabound
