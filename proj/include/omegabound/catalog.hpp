#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "omegabound/sieve.hpp"

namespace omegabound {

/// upper: lhs < rhs (or <=), margin = rhs - lhs.
/// lower: lhs > rhs (or >=), margin = lhs - rhs.
/// lhs is always the bounded quantity, so a positive margin means satisfied.
enum class Orientation { upper, lower };

enum class CheckClass { pass, marginal, fail };

std::string_view to_string(CheckClass c) noexcept;
CheckClass parse_check_class(std::string_view text);

struct CheckRecord {
  std::uint64_t n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  CheckClass cls = CheckClass::pass;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

/// Everything a bound may need at one point n of a scan.
struct PointContext {
  std::uint64_t n = 0;
  int omega = 0;                          // Ω(n)
  std::uint64_t omega_prefix = 0;         // Σ_{k<=n} Ω(k)
  PrimeSums sums;                         // prime accumulators at n
  std::span<const std::uint32_t> primes;  // primes <= n, filled only when the bound asks for them
};

/// Three-way classification with eps_abs = eps_rel * max(|lhs|, |rhs|, 1).
///
/// strict:      margin < -eps fail, |margin| <= eps marginal, else pass.
/// non-strict:  margin < -eps fail, -eps <= margin < 0 marginal, else pass.
CheckClass classify(double margin, double lhs, double rhs, double eps_rel, bool strict) noexcept;

/// A single inequality between two real-valued evaluators.
struct Comparison {
  Orientation orientation = Orientation::upper;
  bool strict = true;
  std::function<double(const PointContext&)> lhs;
  std::function<double(const PointContext&)> rhs;

  [[nodiscard]] CheckRecord evaluate(const PointContext& ctx, double eps_rel) const;
};

/// The formula-only comparison a threshold argument relies on ("for n >= T, A < B").
struct ThresholdComparison {
  std::uint64_t threshold = 0;
  std::uint64_t domain_min = 2;
  Comparison comparison;
};

/// One cataloged inequality.
struct BoundSpec {
  std::string_view id;
  std::string_view description;
  std::uint64_t domain_min = 2;
  bool strict = true;
  Orientation orientation = Orientation::upper;
  // lhs only changes at primes and rhs is nondecreasing in between.
  bool primes_only_eligible = false;
  // false: pure formula, no sieve data read.
  bool needs_sieve = true;
  bool needs_prime_list = false;
  std::function<CheckRecord(const PointContext&, double eps_rel)> check;
  std::optional<ThresholdComparison> threshold;
};

/// All cataloged bounds, in a fixed order.
const std::vector<BoundSpec>& bound_catalog();

/// Throws CatalogError for unknown ids.
const BoundSpec& find_bound(std::string_view id);

}  // namespace omegabound
