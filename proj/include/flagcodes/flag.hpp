#pragma once

#include <algorithm>
#include <compare>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "flagcodes/errors.hpp"
#include "flagcodes/matrix.hpp"
#include "flagcodes/subspace.hpp"

namespace flagcodes {

/// Strictly nested F_1 < ... < F_r < F^n, all proper and nonzero.
class Flag {
 public:
  Flag() = default;
  explicit Flag(std::vector<Subspace> subspaces) : subs_(std::move(subspaces)) {
    if (subs_.empty()) throw InvalidArgument("a flag needs at least one subspace");
    const std::size_t n = subs_[0].ambient();
    for (std::size_t i = 0; i < subs_.size(); ++i) {
      const auto& s = subs_[i];
      if (s.ambient() != n || s.field_ptr() != subs_[0].field_ptr())
        throw InvalidArgument("flag subspaces live in different spaces");
      if (s.dim() == 0 || s.dim() >= n) throw InvalidArgument("flag subspaces must be proper and nonzero");
      if (i > 0 && (s.dim() <= subs_[i - 1].dim() || !s.contains(subs_[i - 1])))
        throw InvalidArgument("flag subspaces are not strictly nested");
    }
  }

  std::size_t ambient() const noexcept { return subs_.empty() ? 0 : subs_[0].ambient(); }
  std::size_t length() const noexcept { return subs_.size(); }
  const Subspace& operator[](std::size_t i) const { return subs_.at(i); }
  const std::vector<Subspace>& subspaces() const noexcept { return subs_; }
  const GaloisField& field() const { return subs_.at(0).field(); }

  std::vector<std::size_t> type() const {
    std::vector<std::size_t> t;
    for (const auto& s : subs_) t.push_back(s.dim());
    return t;
  }
  bool is_full() const {
    const std::size_t n = ambient();
    if (subs_.size() + 1 != n) return false;
    for (std::size_t i = 0; i < subs_.size(); ++i)
      if (subs_[i].dim() != i + 1) return false;
    return true;
  }

  friend bool operator==(const Flag& a, const Flag& b) noexcept { return a.subs_ == b.subs_; }
  /// Lexicographic on F_1, F_2, ...
  friend std::strong_ordering operator<=>(const Flag& a, const Flag& b) noexcept {
    return std::lexicographical_compare_three_way(a.subs_.begin(), a.subs_.end(), b.subs_.begin(), b.subs_.end());
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0;
    for (const auto& s : subs_) h = h * 1000003u ^ s.hash();
    return h;
  }

 private:
  std::vector<Subspace> subs_;
};

inline Flag operator*(const Flag& f, const Matrix& a) {
  std::vector<Subspace> s;
  s.reserve(f.length());
  for (const auto& x : f.subspaces()) s.push_back(x * a);
  return Flag(std::move(s));
}

/// Validates a type vector 0 < t_1 < ... < t_r < n.
inline void check_type(std::span<const std::size_t> type, std::size_t n) {
  if (type.empty()) throw InvalidArgument("empty type vector");
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (type[i] == 0 || type[i] >= n) throw InvalidArgument("type entries must lie in 1..n-1");
    if (i > 0 && type[i] <= type[i - 1]) throw InvalidArgument("type vector must be strictly increasing");
  }
}

inline std::vector<std::size_t> full_type(std::size_t n) {
  std::vector<std::size_t> t;
  for (std::size_t i = 1; i < n; ++i) t.push_back(i);
  return t;
}

inline std::size_t flag_distance(const Flag& f, const Flag& g) {
  if (f.ambient() != g.ambient() || f.type() != g.type()) throw InvalidArgument("flags of different type");
  std::size_t d = 0;
  for (std::size_t i = 0; i < f.length(); ++i) d += subspace_distance(f[i], g[i]);
  return d;
}

/// 2 (sum_{t_i <= n/2} t_i + sum_{t_i > n/2} (n - t_i))
inline std::size_t max_flag_distance(std::span<const std::size_t> type, std::size_t n) {
  check_type(type, n);
  std::size_t s = 0;
  for (auto t : type) s += t <= n / 2 ? t : n - t;
  return 2 * s;
}

/// Flags sharing ambient and type, sorted and deduplicated, with cached
/// projected codes.
class FlagCode {
 public:
  FlagCode() = default;
  explicit FlagCode(std::vector<Flag> flags) : flags_(std::move(flags)) {
    if (flags_.empty()) throw InvalidArgument("a flag code is non-empty");
    n_ = flags_[0].ambient();
    type_ = flags_[0].type();
    for (const auto& f : flags_)
      if (f.ambient() != n_ || f.type() != type_ || &f.field() != &flags_[0].field())
        throw InvalidArgument("flag code members differ in type");
    std::sort(flags_.begin(), flags_.end());
    flags_.erase(std::unique(flags_.begin(), flags_.end()), flags_.end());
    for (std::size_t i = 0; i < type_.size(); ++i) {
      std::vector<Subspace> c;
      for (const auto& f : flags_) c.push_back(f[i]);
      projected_.emplace_back(flags_[0].field(), n_, type_[i], std::move(c));
    }
  }

  std::size_t ambient() const noexcept { return n_; }
  const std::vector<std::size_t>& type() const noexcept { return type_; }
  std::size_t size() const noexcept { return flags_.size(); }
  const std::vector<Flag>& flags() const noexcept { return flags_; }
  const GaloisField& field() const { return flags_.at(0).field(); }
  /// C_i for 0-based position i.
  const SubspaceCode& projected(std::size_t i) const { return projected_.at(i); }
  bool contains(const Flag& f) const { return std::binary_search(flags_.begin(), flags_.end(), f); }

  friend bool operator==(const FlagCode& a, const FlagCode& b) noexcept { return a.flags_ == b.flags_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> type_;
  std::vector<Flag> flags_;
  std::vector<SubspaceCode> projected_;
};

/// Minimum pairwise flag distance; 0 for a singleton.
inline std::size_t min_distance(const FlagCode& c) {
  const auto& f = c.flags();
  if (f.size() < 2) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) best = std::min(best, flag_distance(f[i], f[j]));
  return best;
}

inline std::size_t max_flag_distance(const FlagCode& c) { return max_flag_distance(c.type(), c.ambient()); }

/// |C_1| = ... = |C_r| = |C|
inline bool is_disjoint(const FlagCode& c) {
  for (std::size_t i = 0; i < c.type().size(); ++i)
    if (c.projected(i).size() != c.size()) return false;
  return true;
}

struct OptimumRoutes {
  std::size_t min_distance = 0;
  std::size_t bound = 0;
  bool by_distance = false;        // min distance attains the bound
  bool by_characterization = false;  // disjoint and every C_i attains 2 min(t_i, n - t_i)
};

inline OptimumRoutes optimum_distance_routes(const FlagCode& c) {
  OptimumRoutes r;
  r.min_distance = min_distance(c);
  r.bound = max_flag_distance(c);
  r.by_distance = r.min_distance == r.bound;
  bool all = is_disjoint(c);
  for (std::size_t i = 0; all && i < c.type().size(); ++i)
    all = code_min_distance(c.projected(i)) == max_subspace_distance(c.type()[i], c.ambient());
  r.by_characterization = all;
  return r;
}

/// Both routes are computed; disagreement means a bug here.
inline bool is_optimum_distance(const FlagCode& c) {
  const auto r = optimum_distance_routes(c);
  if (r.by_distance != r.by_characterization)
    throw InternalError("optimum-distance routes disagree (distance " + std::to_string(r.min_distance) + ", bound " +
                        std::to_string(r.bound) + ")");
  return r.by_distance;
}

/// Full flag with F_k = s: RREF rows of s give F_1..F_k, then standard basis
/// vectors in index order (skipping those already spanned) give the rest.
inline Flag complete_to_full_flag(const Subspace& s) {
  const std::size_t n = s.ambient(), k = s.dim();
  if (k == 0 || k >= n) throw InvalidArgument("completion needs a proper nonzero subspace");
  const GaloisField& f = s.field();
  std::vector<Subspace> subs;
  Matrix rows(f, 0, n);
  for (std::size_t i = 0; i < k; ++i) {
    rows = Matrix::stack(rows, s.basis().block(i, 0, 1, n));
    subs.push_back(Subspace::from(rows));
  }
  for (std::size_t j = 0; j < n && subs.size() + 1 < n; ++j) {
    Matrix e(f, 1, n);
    e(0, j) = 1;
    Matrix next = Matrix::stack(rows, e);
    if (rank(next) == rows.rows()) continue;
    rows = std::move(next);
    subs.push_back(Subspace::from(rows));
  }
  return Flag(std::move(subs));
}

/// The standard full flag span(e_1) < span(e_1, e_2) < ...
inline Flag standard_full_flag(const GaloisField& f, std::size_t n) {
  Matrix e1(f, 1, n);
  e1(0, 0) = 1;
  return complete_to_full_flag(Subspace::from(e1));
}

}  // namespace flagcodes

template <>
struct std::hash<flagcodes::Flag> {
  std::size_t operator()(const flagcodes::Flag& f) const noexcept { return f.hash(); }
};
