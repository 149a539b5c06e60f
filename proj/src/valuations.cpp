#include "omegabound/valuations.hpp"

#include <string>

#include "omegabound/errors.hpp"

namespace omegabound {

namespace {

std::uint64_t legendre_unchecked(std::uint64_t n, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::uint64_t q = n / p; q > 0; q /= p) v += q;
  return v;
}

void require_within(std::uint64_t n, const FactorSieve& sieve, const char* what) {
  if (n > sieve.limit()) {
    throw DomainError(std::string(what) + ": n=" + std::to_string(n) + " exceeds sieve limit " +
                      std::to_string(sieve.limit()));
  }
}

// v_p(n!) for every prime p <= n, indexed by p.
std::vector<std::uint64_t> legendre_table(std::uint64_t n, const FactorSieve& sieve) {
  std::vector<std::uint64_t> table(n + 1, 0);
  for (const auto p : sieve.primes_up_to(n)) table[p] = legendre_unchecked(n, p);
  return table;
}

// floor(min_i num_i / den_i) with the minimum taken by cross-multiplication.
template <class Exponents>
std::uint64_t floor_of_min_ratio(const std::vector<PrimePower>& factors, Exponents&& v_of) {
  std::uint64_t best_num = 0;
  std::uint64_t best_den = 0;
  for (const auto& [p, a] : factors) {
    const std::uint64_t num = v_of(p);
    // num < n and a < 64, so the products stay far below 2^64.
    if (best_den == 0 || num * best_den < best_num * a) {
      best_num = num;
      best_den = a;
    }
  }
  return best_num / best_den;
}

}  // namespace

std::vector<PrimePower> factorize(std::uint64_t m, const FactorSieve& sieve) {
  if (m < 2) throw DomainError("factorize: m must be >= 2");
  require_within(m, sieve, "factorize");
  std::vector<PrimePower> out;
  while (m > 1) {
    const std::uint64_t p = sieve.spf(m);
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

bool is_prime(std::uint64_t k) {
  if (k < 2) return false;
  if (k % 2 == 0) return k == 2;
  for (std::uint64_t d = 3; d <= k / d; d += 2) {
    if (k % d == 0) return false;
  }
  return true;
}

std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("legendre_valuation: p=" + std::to_string(p) + " is not prime");
  if (p > n) {
    throw DomainError("legendre_valuation: p=" + std::to_string(p) + " exceeds n=" + std::to_string(n));
  }
  return legendre_unchecked(n, p);
}

std::uint64_t legendre_valuation_of_prime(std::uint64_t n, std::uint64_t p) noexcept {
  return legendre_unchecked(n, p);
}

std::uint64_t upsilon(std::uint64_t n, const FactorSieve& sieve) {
  if (n < 2) throw DomainError("upsilon: n must be >= 2");
  require_within(n, sieve, "upsilon");
  std::uint64_t total = 0;
  for (const auto p : sieve.primes_up_to(n)) total += legendre_unchecked(n, p);
  return total;
}

std::uint64_t generalized_valuation(std::uint64_t m, std::uint64_t n, const FactorSieve& sieve) {
  if (m < 2) throw DomainError("generalized_valuation: m must be >= 2 (v_1 is undefined)");
  if (m > n) {
    throw DomainError("generalized_valuation: m=" + std::to_string(m) + " exceeds n=" + std::to_string(n));
  }
  require_within(n, sieve, "generalized_valuation");
  return floor_of_min_ratio(factorize(m, sieve),
                            [n](std::uint64_t p) { return legendre_unchecked(n, p); });
}

std::uint64_t generalized_valuation_sum(std::uint64_t n, const FactorSieve& sieve, std::uint64_t cap) {
  if (n < 2) throw DomainError("generalized_valuation_sum: n must be >= 2");
  if (n > cap) {
    throw ResourceError("generalized_valuation_sum: n=" + std::to_string(n) + " exceeds the cap " +
                        std::to_string(cap));
  }
  require_within(n, sieve, "generalized_valuation_sum");
  const auto table = legendre_table(n, sieve);
  const auto lookup = [&table](std::uint64_t p) { return table[p]; };
  std::uint64_t total = 0;
  for (std::uint64_t m = 2; m <= n; ++m) total += floor_of_min_ratio(factorize(m, sieve), lookup);
  return total;
}

double f_ratio(std::uint64_t n, const FactorSieve& sieve, std::uint64_t cap) {
  const std::uint64_t numerator = generalized_valuation_sum(n, sieve, cap);
  return static_cast<double>(numerator) / static_cast<double>(upsilon(n, sieve));
}

}  // namespace omegabound
