#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "flagcodes/errors.hpp"

namespace flagcodes {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorisation by trial division, primes ascending.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1u);
  return out;
}

/// base^exp, throwing on 64-bit overflow.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw InvalidArgument("integer power overflows 64 bits");
    r *= base;
  }
  return r;
}

/// Multiplicative order of x in a group whose exponent divides `exponent`.
/// Starts from `exponent` and strips prime factors while x^(m/r) stays trivial.
template <class T, class PowFn>
std::uint64_t order_by_descent(const T& x, const T& one, std::uint64_t exponent, PowFn&& pow) {
  if (!(pow(x, exponent) == one))
    throw InvalidArgument("element order does not divide the given exponent");
  std::uint64_t m = exponent;
  for (const auto& [r, mult] : factorize(exponent)) {
    (void)mult;
    while (m % r == 0 && pow(x, m / r) == one) m /= r;
  }
  return m;
}

}  // namespace flagcodes
