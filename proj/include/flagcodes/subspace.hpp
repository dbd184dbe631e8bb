#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "flagcodes/errors.hpp"
#include "flagcodes/field.hpp"
#include "flagcodes/matrix.hpp"

namespace flagcodes {

/// A point of the Grassmannian G_q(k, n), stored by its RREF basis. Two
/// subspaces are equal iff their canonical matrices are entry-identical.
class Subspace {
 public:
  Subspace() = default;

  /// Row space of m (any rank).
  static Subspace from(const Matrix& m) {
    RrefResult r = rref(m);
    Subspace s;
    s.basis_ = r.matrix.block(0, 0, r.rank, m.cols());
    return s;
  }
  static Subspace zero(const GaloisField& f, std::size_t n) {
    Subspace s;
    s.basis_ = Matrix(f, 0, n);
    return s;
  }
  static Subspace whole(const GaloisField& f, std::size_t n) {
    Subspace s;
    s.basis_ = Matrix::identity(f, n);
    return s;
  }

  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const GaloisField& field() const { return basis_.field(); }
  const GaloisField* field_ptr() const noexcept { return basis_.field_ptr(); }

  /// True iff `other` is a subspace of *this.
  bool contains(const Subspace& other) const {
    check_ambient(other);
    if (other.dim() == 0) return true;
    return rank(Matrix::stack(basis_, other.basis_)) == dim();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept { return a.basis_ == b.basis_; }
  /// Ambient, then dimension, then canonical matrix entries lexicographically.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept {
    if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
    return a.basis_ <=> b.basis_;
  }

  std::size_t hash() const noexcept { return basis_.hash(); }

  void check_ambient(const Subspace& other) const {
    if (ambient() != other.ambient()) throw InvalidArgument("subspaces live in different ambient spaces");
    if (basis_.field_ptr() != other.basis_.field_ptr()) throw InvalidArgument("subspaces over different field levels");
  }

 private:
  Matrix basis_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept { return s.hash(); }
};

/// U . A = rowsp(U A)
inline Subspace operator*(const Subspace& u, const Matrix& a) {
  if (u.dim() == 0) return Subspace::zero(u.field(), a.cols());
  return Subspace::from(u.basis() * a);
}

inline Subspace sum(const Subspace& u, const Subspace& v) {
  u.check_ambient(v);
  return Subspace::from(Matrix::stack(u.basis(), v.basis()));
}

/// Intersection via the left kernel of [U; V]: rows (x, y) with xU + yV = 0
/// give xU in U cap V.
inline Subspace intersect(const Subspace& u, const Subspace& v) {
  u.check_ambient(v);
  const GaloisField& f = u.field();
  const std::size_t n = u.ambient(), a = u.dim(), b = v.dim();
  if (a == 0 || b == 0) return Subspace::zero(f, n);
  const Matrix stacked = Matrix::stack(u.basis(), v.basis());
  RrefResult r = rref(Matrix::concat(stacked, Matrix::identity(f, a + b)));
  std::vector<std::size_t> kernel_rows;
  for (std::size_t i = 0; i < a + b; ++i) {
    bool zero_left = true;
    for (std::size_t j = 0; j < n && zero_left; ++j) zero_left = r.matrix(i, j) == 0;
    if (zero_left) kernel_rows.push_back(i);
  }
  if (kernel_rows.empty()) return Subspace::zero(f, n);
  const Matrix x = r.matrix.select_rows(kernel_rows).block(0, n, kernel_rows.size(), a);
  return Subspace::from(x * u.basis());
}

/// d_S(U, V) = dim U + dim V - 2 dim(U cap V)
inline std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
  u.check_ambient(v);
  // dim(U cap V) = dim U + dim V - dim(U + V)
  const std::size_t s = rank(Matrix::stack(u.basis(), v.basis()));
  return 2 * s - u.dim() - v.dim();
}

/// Largest distance between two t-dimensional subspaces of F^n.
inline std::size_t max_subspace_distance(std::size_t t, std::size_t n) { return 2 * std::min(t, n - t); }

/// Gaussian binomial [n choose k]_q, saturating at uint64 max.
inline std::uint64_t gaussian_binomial(std::uint64_t q, unsigned n, unsigned k) {
  if (k > n) return 0;
  using u128 = unsigned __int128;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  auto sat = [](u128 v) { return v > kMax ? kMax : std::uint64_t(v); };
  // [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (unsigned i = 0; i <= n; ++i) t[i][0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    std::uint64_t qj = 1;
    for (unsigned j = 1; j <= std::min(i, k); ++j) {
      qj = sat(u128(qj) * q);
      t[i][j] = sat(u128(t[i - 1][j - 1]) + sat(u128(qj) * t[i - 1][j]));
    }
  }
  return t[n][k];
}

/// All k-dimensional subspaces of F^n in canonical order. Iterates pivot
/// column sets and the free entries of each RREF pattern.
inline std::vector<Subspace> enumerate_grassmannian(const GaloisField& f, std::size_t k, std::size_t n,
                                                    std::size_t cap = caps::resolve(caps::kGrassmannian)) {
  if (k > n) throw InvalidArgument("Grassmannian needs 0 <= k <= n");
  const std::uint64_t count = gaussian_binomial(f.size(), unsigned(n), unsigned(k));
  if (count > cap) throw CapExceeded("Grassmannian G(" + std::to_string(k) + "," + std::to_string(n) + ")", cap);

  std::vector<Subspace> out;
  out.reserve(count);
  if (k == 0) {
    out.push_back(Subspace::zero(f, n));
    return out;
  }
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    // free positions: (row i, col j) with j > piv[i] and j not a pivot column
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (!std::binary_search(piv.begin(), piv.end(), j)) free.emplace_back(i, j);
    Matrix m(f, k, n);
    for (std::size_t i = 0; i < k; ++i) m(i, piv[i]) = 1;
    std::vector<Code> digits(free.size(), 0);
    while (true) {
      for (std::size_t t = 0; t < free.size(); ++t) m(free[t].first, free[t].second) = digits[t];
      out.push_back(Subspace::from(m));
      std::size_t t = 0;
      while (t < digits.size() && ++digits[t] == f.size()) digits[t++] = 0;
      if (t == digits.size()) break;
    }
    // next pivot combination
    std::size_t i = k;
    while (i-- > 0 && piv[i] == n - k + i) {
    }
    if (i == std::size_t(-1)) break;
    ++piv[i];
    for (std::size_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A constant-dimension code: sorted, duplicate-free subspaces sharing (n, k).
class SubspaceCode {
 public:
  SubspaceCode() = default;
  SubspaceCode(const GaloisField& f, std::size_t n, std::size_t k, std::vector<Subspace> members)
      : field_(&f), n_(n), k_(k), members_(std::move(members)) {
    for (const auto& s : members_)
      if (s.ambient() != n_ || s.dim() != k_ || &s.field() != field_)
        throw InvalidArgument("subspace code member has the wrong shape");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  const GaloisField& field() const { return *field_; }
  std::size_t ambient() const noexcept { return n_; }
  std::size_t dim() const noexcept { return k_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Subspace>& members() const noexcept { return members_; }
  bool contains(const Subspace& s) const { return std::binary_search(members_.begin(), members_.end(), s); }

  friend bool operator==(const SubspaceCode& a, const SubspaceCode& b) noexcept {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.members_ == b.members_;
  }

 private:
  const GaloisField* field_ = nullptr;
  std::size_t n_ = 0, k_ = 0;
  std::vector<Subspace> members_;
};

/// Minimum pairwise distance; 0 for a single codeword.
inline std::size_t code_min_distance(std::span<const Subspace> members) {
  if (members.size() < 2) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) best = std::min(best, subspace_distance(members[i], members[j]));
  return best;
}
inline std::size_t code_min_distance(const SubspaceCode& c) { return code_min_distance(c.members()); }

/// Pairwise trivial intersections and (q^n - 1)/(q^k - 1) members.
inline bool is_spread(const SubspaceCode& c) {
  const std::size_t n = c.ambient(), k = c.dim();
  if (k == 0 || n % k != 0) return false;
  const std::uint64_t q = c.field().size();
  const std::uint64_t expected = (checked_pow(q, unsigned(n)) - 1) / (checked_pow(q, unsigned(k)) - 1);
  if (c.size() != expected) return false;
  const auto& m = c.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (intersect(m[i], m[j]).dim() != 0) return false;
  return true;
}

}  // namespace flagcodes

template <>
struct std::hash<flagcodes::Subspace> {
  std::size_t operator()(const flagcodes::Subspace& s) const noexcept { return s.hash(); }
};
