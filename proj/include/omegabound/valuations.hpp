#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "omegabound/sieve.hpp"

namespace omegabound {

/// Default ceiling on n for f_ratio; the numerator costs O(n * distinct prime factors).
inline constexpr std::uint64_t kDefaultFRatioCap = 100'000;

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization of 2 <= m <= sieve.limit(), primes ascending.
std::vector<PrimePower> factorize(std::uint64_t m, const FactorSieve& sieve);

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t k);

/// Legendre's v_p(n!) = Σ floor(n / p^i), by repeated integer division of n by p.
/// Throws DomainError unless p is prime and 2 <= p <= n.
std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p);

/// Same sum without the primality and range checks; p is assumed prime.
std::uint64_t legendre_valuation_of_prime(std::uint64_t n, std::uint64_t p) noexcept;

/// Υ(n) = Σ_{p<=n} v_p(n!). Equals Σ_{k<=n} Ω(k).
std::uint64_t upsilon(std::uint64_t n, const FactorSieve& sieve);

/// Largest e with m^e dividing n!: floor(min over p | m of v_p(n!) / v_p(m)).
/// Requires 2 <= m <= n <= sieve.limit(); m = 1 is rejected (no prime divides it).
std::uint64_t generalized_valuation(std::uint64_t m, std::uint64_t n, const FactorSieve& sieve);

/// Exact numerator Σ_{m=2}^{n} v_m(n!) of the empirical ratio.
std::uint64_t generalized_valuation_sum(std::uint64_t n, const FactorSieve& sieve,
                                        std::uint64_t cap = kDefaultFRatioCap);

/// (Σ_{m=2}^{n} v_m(n!)) / Υ(n). The sum starts at m = 2 because v_1 is undefined.
/// Throws ResourceError when n > cap.
double f_ratio(std::uint64_t n, const FactorSieve& sieve, std::uint64_t cap = kDefaultFRatioCap);

}  // namespace omegabound
