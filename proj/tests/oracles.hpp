#pragma once

// Reference implementations used only by tests. None of them share code with the
// library: trial division instead of sieves, exponent vectors instead of Legendre.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

inline std::uint64_t smallest_factor(std::uint64_t k) {
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    if (k % d == 0) return d;
  }
  return k;
}

inline bool is_prime(std::uint64_t k) { return k >= 2 && smallest_factor(k) == k; }

inline int big_omega(std::uint64_t k) {
  int count = 0;
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    while (k % d == 0) {
      k /= d;
      ++count;
    }
  }
  return count + (k > 1 ? 1 : 0);
}

inline std::map<std::uint64_t, std::uint64_t> factor(std::uint64_t k) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    while (k % d == 0) {
      k /= d;
      ++out[d];
    }
  }
  if (k > 1) ++out[k];
  return out;
}

// Exponent vector of n! accumulated from the factorization of every k <= n.
inline std::map<std::uint64_t, std::uint64_t> factorial_exponents(std::uint64_t n) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (std::uint64_t k = 2; k <= n; ++k) {
    for (const auto& [p, e] : factor(k)) out[p] += e;
  }
  return out;
}

inline std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// Largest e with m^e | N, by repeated division; N must fit in 64 bits.
inline std::uint64_t divisibility_exponent(std::uint64_t m, std::uint64_t big) {
  std::uint64_t e = 0;
  while (big % m == 0) {
    big /= m;
    ++e;
  }
  return e;
}

// m^e | n! iff every prime exponent of m times e fits inside n!'s exponent vector.
inline bool power_divides_factorial(const std::map<std::uint64_t, std::uint64_t>& fact_exp, std::uint64_t m,
                                    std::uint64_t e) {
  for (const auto& [p, a] : factor(m)) {
    const auto it = fact_exp.find(p);
    const std::uint64_t have = it == fact_exp.end() ? 0 : it->second;
    if (a * e > have) return false;
  }
  return true;
}

struct NaivePrimeSums {
  std::uint64_t pi = 0;
  long double theta = 0;
  long double inv_pm1 = 0;
  long double inv_logp = 0;
};

// Extended-precision naive sums over trial-division primes.
inline NaivePrimeSums naive_prime_sums(std::uint64_t n) {
  NaivePrimeSums s;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (!is_prime(p)) continue;
    const long double x = static_cast<long double>(p);
    ++s.pi;
    s.theta += std::log(x);
    s.inv_pm1 += 1.0L / (x - 1.0L);
    s.inv_logp += 1.0L / std::log(x);
  }
  return s;
}

}  // namespace oracle
