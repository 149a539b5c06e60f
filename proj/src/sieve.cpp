#include "omegabound/sieve.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "omegabound/errors.hpp"

namespace omegabound {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::uint32_t FactorSieve::spf(std::uint64_t k) const {
  if (k < 2 || k > limit_) {
    throw DomainError("spf: k=" + std::to_string(k) + " outside [2, " + std::to_string(limit_) + "]");
  }
  return spf_[k];
}

bool FactorSieve::is_prime(std::uint64_t k) const {
  if (k < 2) return false;
  return spf(k) == k;
}

std::vector<std::uint32_t> FactorSieve::primes_up_to(std::uint64_t n) const {
  if (n > limit_) {
    throw DomainError("primes_up_to: n=" + std::to_string(n) + " exceeds sieve limit " +
                      std::to_string(limit_));
  }
  std::vector<std::uint32_t> primes;
  for (std::uint64_t k = 2; k <= n; ++k) {
    if (spf_[k] == k) primes.push_back(static_cast<std::uint32_t>(k));
  }
  return primes;
}

FactorSieve build_spf(std::uint64_t limit, std::uint64_t budget_entries) {
  if (limit < 2) throw DomainError("build_spf: limit must be >= 2");
  if (limit + 1 > budget_entries || limit > std::numeric_limits<std::uint32_t>::max()) {
    throw ResourceError("build_spf: a table of " + std::to_string(limit + 1) +
                        " entries exceeds the sieve budget of " + std::to_string(budget_entries) +
                        "; use the segmented routines for this range");
  }

  FactorSieve sieve;
  sieve.limit_ = limit;
  sieve.spf_.assign(limit + 1, 0);
  auto& spf = sieve.spf_;
  for (std::uint64_t k = 2; k <= limit; k += 2) spf[k] = 2;
  for (std::uint64_t i = 3; i <= limit; i += 2) {
    if (spf[i] != 0) continue;
    spf[i] = static_cast<std::uint32_t>(i);
    if (i > limit / i) continue;
    for (std::uint64_t j = i * i; j <= limit; j += 2 * i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  return sieve;
}

int big_omega(std::uint64_t k, const FactorSieve& sieve) {
  if (k == 0) throw DomainError("big_omega: k must be >= 1");
  if (k > sieve.limit()) {
    throw DomainError("big_omega: k=" + std::to_string(k) + " exceeds sieve limit " +
                      std::to_string(sieve.limit()));
  }
  int count = 0;
  while (k > 1) {
    k /= sieve.spf(k);
    ++count;
  }
  return count;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<char> composite(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    if (i > limit / i) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return primes;
}

SegmentedOmega::SegmentedOmega(std::uint64_t end) : end_(end), base_primes_(primes_up_to(isqrt(end))) {}

void SegmentedOmega::compute(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint8_t>& omega) {
  if (lo < 1 || lo > hi || hi > end_ + 1) {
    throw DomainError("SegmentedOmega: segment [" + std::to_string(lo) + ", " + std::to_string(hi) +
                      ") outside [1, " + std::to_string(end_) + "]");
  }
  const std::size_t len = hi - lo;
  omega.assign(len, 0);
  smooth_part_.assign(len, 1);
  if (len == 0) return;
  const std::uint64_t last = hi - 1;

  for (const std::uint64_t p : base_primes_) {
    if (p > last / p) break;
    for (std::uint64_t pk = p;;) {
      const std::uint64_t first = (lo + pk - 1) / pk * pk;
      for (std::uint64_t j = first; j <= last; j += pk) {
        ++omega[j - lo];
        smooth_part_[j - lo] *= p;
      }
      if (pk > last / p) break;
      pk *= p;
    }
  }
  // Whatever is left after removing primes <= sqrt(last) is 1 or a single prime.
  for (std::size_t i = 0; i < len; ++i) {
    if (smooth_part_[i] != lo + i) ++omega[i];
  }
}

std::uint64_t omega_prefix_sum(std::uint64_t n, std::uint64_t segment_size) {
  if (n < 1) throw DomainError("omega_prefix_sum: n must be >= 1");
  if (segment_size < 1) throw DomainError("omega_prefix_sum: segment_size must be >= 1");
  SegmentedOmega engine(n);
  std::vector<std::uint8_t> omega;
  std::uint64_t total = 0;
  for (std::uint64_t lo = 1; lo <= n;) {
    const std::uint64_t hi = (n + 1 - lo > segment_size) ? lo + segment_size : n + 1;
    engine.compute(lo, hi, omega);
    for (const auto w : omega) total += w;
    lo = hi;
  }
  return total;
}

void PrimeSumsAccumulator::add_prime(std::uint64_t p) {
  const double x = static_cast<double>(p);
  const double log_p = std::log(x);
  ++pi;
  theta.add(log_p);
  inv_pm1.add(1.0 / (x - 1.0));
  inv_logp.add(1.0 / log_p);
}

PrimeSums PrimeSumsAccumulator::at(std::uint64_t n) const noexcept {
  return PrimeSums{n, pi, theta.value(), inv_pm1.value(), inv_logp.value()};
}

PrimeSums prime_sums(std::uint64_t n, std::uint64_t segment_size) {
  if (n < 2) throw DomainError("prime_sums: n must be >= 2");
  if (segment_size < 1) throw DomainError("prime_sums: segment_size must be >= 1");
  SegmentedOmega engine(n);
  std::vector<std::uint8_t> omega;
  PrimeSumsAccumulator acc;
  for (std::uint64_t lo = 1; lo <= n;) {
    const std::uint64_t hi = (n + 1 - lo > segment_size) ? lo + segment_size : n + 1;
    engine.compute(lo, hi, omega);
    for (std::size_t i = 0; i < omega.size(); ++i) {
      if (omega[i] == 1) acc.add_prime(lo + i);
    }
    lo = hi;
  }
  return acc.at(n);
}

}  // namespace omegabound
