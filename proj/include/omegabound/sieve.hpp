#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "omegabound/compensated_sum.hpp"

namespace omegabound {

inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 20;
/// Largest smallest-prime-factor table (in entries) built without an explicit override.
inline constexpr std::uint64_t kDefaultSieveBudget = std::uint64_t{1} << 31;

/// Smallest-prime-factor table over [2, limit].
///
/// spf(k) is prime, divides k, and no smaller prime divides k; k is prime
/// exactly when spf(k) == k. Immutable once built.
class FactorSieve {
 public:
  [[nodiscard]] std::uint64_t limit() const noexcept { return limit_; }

  /// Throws DomainError unless 2 <= k <= limit().
  [[nodiscard]] std::uint32_t spf(std::uint64_t k) const;

  [[nodiscard]] bool is_prime(std::uint64_t k) const;

  /// Primes p <= n in ascending order; n must not exceed limit().
  [[nodiscard]] std::vector<std::uint32_t> primes_up_to(std::uint64_t n) const;

 private:
  friend FactorSieve build_spf(std::uint64_t limit, std::uint64_t budget_entries);

  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> spf_;
};

/// Builds the table for [2, limit]. Throws ResourceError when limit + 1 entries
/// exceed `budget_entries`; use the segmented routines for larger ranges.
FactorSieve build_spf(std::uint64_t limit, std::uint64_t budget_entries = kDefaultSieveBudget);

/// Total number of prime factors of k counted with multiplicity; Ω(1) = 0.
int big_omega(std::uint64_t k, const FactorSieve& sieve);

/// Plain Eratosthenes, ascending primes <= limit.
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

/// Segment-by-segment Ω(k) for k in [1, end].
///
/// Each call to compute() fills Ω for [lo, hi) using only the base primes up to
/// sqrt(end); segments are independent, so a scan can stop and resume at any
/// segment boundary.
class SegmentedOmega {
 public:
  explicit SegmentedOmega(std::uint64_t end);

  [[nodiscard]] std::uint64_t end() const noexcept { return end_; }

  /// Requires 1 <= lo <= hi <= end + 1. On return omega[i] = Ω(lo + i).
  void compute(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint8_t>& omega);

 private:
  std::uint64_t end_;
  std::vector<std::uint32_t> base_primes_;
  std::vector<std::uint64_t> smooth_part_;  // product of the base-prime factors found so far
};

/// Exact S(n) = Σ_{k<=n} Ω(k) via segmented sieving; independent of segment_size.
std::uint64_t omega_prefix_sum(std::uint64_t n, std::uint64_t segment_size = kDefaultSegmentSize);

/// Prefix accumulators over primes p <= n.
struct PrimeSums {
  std::uint64_t n = 0;
  std::uint64_t pi = 0;
  double theta = 0.0;         // Σ log p
  double sum_inv_pm1 = 0.0;   // Σ 1/(p-1)
  double sum_inv_logp = 0.0;  // Σ 1/log p

  friend bool operator==(const PrimeSums&, const PrimeSums&) = default;
};

/// Running PrimeSums; primes must be added in ascending order.
struct PrimeSumsAccumulator {
  std::uint64_t pi = 0;
  KahanSum theta;
  KahanSum inv_pm1;
  KahanSum inv_logp;

  void add_prime(std::uint64_t p);
  [[nodiscard]] PrimeSums at(std::uint64_t n) const noexcept;

  friend bool operator==(const PrimeSumsAccumulator&, const PrimeSumsAccumulator&) = default;
};

/// Throws DomainError for n < 2.
PrimeSums prime_sums(std::uint64_t n, std::uint64_t segment_size = kDefaultSegmentSize);

}  // namespace omegabound
