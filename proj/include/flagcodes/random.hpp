#pragma once

// Reproducible randomness. The engine is std::mt19937_64 (its output sequence
// is fixed by the C++ standard); bounded draws use the rejection rule below
// rather than std::uniform_int_distribution, whose algorithm is unspecified.

#include <cstdint>
#include <random>
#include <vector>

#include "flagcodes/errors.hpp"
#include "flagcodes/field.hpp"
#include "flagcodes/matrix.hpp"
#include "flagcodes/subspace.hpp"

namespace flagcodes {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, n): reject raw draws below 2^64 mod n, then reduce.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("below(0)");
    const std::uint64_t threshold = (0 - n) % n;
    while (true) {
      const std::uint64_t r = eng_();
      if (r >= threshold) return r % n;
    }
  }

  Code element(const GaloisField& f) { return Code(below(f.size())); }
  Code nonzero(const GaloisField& f) { return Code(1 + below(f.size() - 1)); }

 private:
  std::mt19937_64 eng_;
};

inline Matrix random_matrix(Rng& rng, const GaloisField& f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.element(f);
  return m;
}

/// Uniform over GL(n) by rejection.
inline Matrix random_invertible(Rng& rng, const GaloisField& f, std::size_t n) {
  while (true) {
    Matrix m = random_matrix(rng, f, n, n);
    if (is_invertible(m)) return m;
  }
}

/// Uniform over G(k, n): a random full-rank k x n matrix, by rejection.
inline Subspace random_subspace(Rng& rng, const GaloisField& f, std::size_t k, std::size_t n) {
  if (k > n) throw InvalidArgument("random_subspace needs k <= n");
  if (k == 0) return Subspace::zero(f, n);
  while (true) {
    Matrix m = random_matrix(rng, f, k, n);
    if (rank(m) == k) return Subspace::from(m);
  }
}

}  // namespace flagcodes
