#pragma once

// Finite matrix groups as explicit element sets: closure from generators,
// orbits and stabilizers, and an exhaustive subgroup search on a Cayley table.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "flagcodes/errors.hpp"
#include "flagcodes/field.hpp"
#include "flagcodes/matrix.hpp"
#include "flagcodes/number_theory.hpp"

namespace flagcodes {

class MatrixGroup {
 public:
  MatrixGroup() = default;

  const GaloisField& field() const { return *field_; }
  const GaloisField* field_ptr() const noexcept { return field_; }
  /// Matrices are degree x degree.
  std::size_t degree() const noexcept { return n_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Matrix>& generators() const noexcept { return generators_; }
  /// Canonically sorted.
  const std::vector<Matrix>& elements() const noexcept { return elements_; }

  static constexpr std::size_t npos = std::size_t(-1);
  std::size_t index_of(const Matrix& m) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), m);
    return it != elements_.end() && *it == m ? std::size_t(it - elements_.begin()) : npos;
  }
  bool contains(const Matrix& m) const { return index_of(m) != npos; }

  /// Subgroup test on element sets.
  bool is_subgroup_of(const MatrixGroup& g) const {
    return std::includes(g.elements_.begin(), g.elements_.end(), elements_.begin(), elements_.end());
  }

  friend bool operator==(const MatrixGroup& a, const MatrixGroup& b) noexcept {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }

  /// Hash of the sorted element set.
  std::size_t hash() const noexcept {
    std::size_t h = elements_.size();
    for (const auto& m : elements_) h = h * 1000003u ^ m.hash();
    return h;
  }

  /// Wrap a set already known to be a group; picks generators greedily and
  /// throws if the set is not closed.
  static MatrixGroup from_elements(const GaloisField& f, std::size_t n, std::vector<Matrix> elements);

  friend MatrixGroup close_group(const GaloisField& f, std::size_t n, std::vector<Matrix> generators,
                                 std::size_t cap);

 private:
  const GaloisField* field_ = nullptr;
  std::size_t n_ = 0;
  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
};

namespace detail {

inline std::vector<Matrix> bfs_closure(const GaloisField& f, std::size_t n, const std::vector<Matrix>& gens,
                                       std::size_t cap) {
  std::unordered_set<Matrix, MatrixHash> seen;
  std::vector<Matrix> out;
  std::deque<Matrix> queue;
  Matrix id = Matrix::identity(f, n);
  seen.insert(id);
  queue.push_back(id);
  out.push_back(std::move(id));
  while (!queue.empty()) {
    Matrix x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Matrix y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw CapExceeded("group closure", cap);
        queue.push_back(y);
        out.push_back(std::move(y));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Breadth-first closure under right multiplication by the generators.
inline MatrixGroup close_group(const GaloisField& f, std::size_t n, std::vector<Matrix> generators,
                               std::size_t cap = caps::resolve(caps::kGroupClosure)) {
  for (const auto& g : generators) {
    if (g.field_ptr() != &f || g.rows() != n || g.cols() != n) throw InvalidArgument("generator has the wrong shape");
    if (!is_invertible(g)) throw InvalidArgument("generator is singular");
  }
  MatrixGroup grp;
  grp.field_ = &f;
  grp.n_ = n;
  grp.elements_ = detail::bfs_closure(f, n, generators, cap);
  grp.generators_ = std::move(generators);
  return grp;
}

inline MatrixGroup MatrixGroup::from_elements(const GaloisField& f, std::size_t n, std::vector<Matrix> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  MatrixGroup grp;
  grp.field_ = &f;
  grp.n_ = n;
  const Matrix id = Matrix::identity(f, n);
  if (!std::binary_search(elements.begin(), elements.end(), id)) throw InvalidArgument("element set lacks the identity");
  std::unordered_set<Matrix, MatrixHash> span{id};
  for (const auto& e : elements) {
    if (span.count(e)) continue;
    grp.generators_.push_back(e);
    std::vector<Matrix> closed;
    try {
      closed = detail::bfs_closure(f, n, grp.generators_, elements.size());
    } catch (const CapExceeded&) {
      throw InvalidArgument("element set is not closed");
    }
    for (const auto& c : closed) {
      if (!std::binary_search(elements.begin(), elements.end(), c)) throw InvalidArgument("element set is not closed");
      span.insert(c);
    }
  }
  if (span.size() != elements.size()) throw InternalError("greedy generating set does not span");
  grp.elements_ = std::move(elements);
  return grp;
}

inline MatrixGroup trivial_group(const GaloisField& f, std::size_t n) {
  return MatrixGroup::from_elements(f, n, {Matrix::identity(f, n)});
}

/// Order of a group element, by descent from the group order.
inline std::uint64_t element_order(const MatrixGroup& g, const Matrix& m) {
  const Matrix id = Matrix::identity(g.field(), g.degree());
  return order_by_descent(m, id, g.order(), [](const Matrix& a, std::uint64_t e) { return a.pow(e); });
}

/// Point . A for the actions used here (Subspace and Flag define operator*).
template <class Point>
Point act(const Point& x, const Matrix& a) {
  return x * a;
}

template <class Point>
struct OrbitResult {
  Point base;
  std::vector<Point> orbit;  // sorted
  MatrixGroup stabilizer;
};

template <class Point>
MatrixGroup stabilizer(const MatrixGroup& g, const Point& x) {
  std::vector<Matrix> st;
  for (const auto& a : g.elements())
    if (act(x, a) == x) st.push_back(a);
  return MatrixGroup::from_elements(g.field(), g.degree(), std::move(st));
}

template <class Point>
std::vector<Point> orbit_points(const MatrixGroup& g, const Point& x) {
  std::vector<Point> orb;
  orb.reserve(g.order());
  for (const auto& a : g.elements()) orb.push_back(act(x, a));
  std::sort(orb.begin(), orb.end());
  orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
  return orb;
}

template <class Point>
OrbitResult<Point> orbit_of(const MatrixGroup& g, const Point& x) {
  if (x.ambient() != g.degree()) throw InvalidArgument("point and group have different ambient sizes");
  OrbitResult<Point> r{x, {}, {}};
  std::vector<Matrix> st;
  r.orbit.reserve(g.order());
  for (const auto& a : g.elements()) {
    Point y = act(x, a);
    if (y == x) st.push_back(a);
    r.orbit.push_back(std::move(y));
  }
  std::sort(r.orbit.begin(), r.orbit.end());
  r.orbit.erase(std::unique(r.orbit.begin(), r.orbit.end()), r.orbit.end());
  r.stabilizer = MatrixGroup::from_elements(g.field(), g.degree(), std::move(st));
  if (r.orbit.size() * r.stabilizer.order() != g.order()) throw InternalError("orbit-stabilizer identity fails");
  return r;
}

/// Splits an invariant point set into orbits, in order of first point.
template <class Point>
std::vector<OrbitResult<Point>> partition_into_orbits(const MatrixGroup& g, std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<char> done(points.size(), 0);
  std::vector<OrbitResult<Point>> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (done[i]) continue;
    auto r = orbit_of(g, points[i]);
    for (const auto& y : r.orbit) {
      auto it = std::lower_bound(points.begin(), points.end(), y);
      if (it == points.end() || !(*it == y)) throw InvalidArgument("point set is not invariant under the group");
      done[std::size_t(it - points.begin())] = 1;
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Multiplication table on the sorted element list of a group.
class CayleyTable {
 public:
  static constexpr std::size_t kMaxOrder = 4096;

  explicit CayleyTable(const MatrixGroup& g) : group_(&g), n_(g.order()) {
    if (n_ > kMaxOrder) throw CapExceeded("Cayley table", kMaxOrder);
    const auto& el = g.elements();
    std::unordered_map<Matrix, std::uint32_t, MatrixHash> idx;
    for (std::uint32_t i = 0; i < n_; ++i) idx.emplace(el[i], i);
    table_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        auto it = idx.find(el[i] * el[j]);
        if (it == idx.end()) throw InternalError("group is not closed under multiplication");
        table_[i * n_ + j] = it->second;
      }
    identity_ = idx.at(Matrix::identity(g.field(), g.degree()));
    order_.assign(n_, 0);
    for (std::uint32_t i = 0; i < n_; ++i) {
      std::uint32_t x = i, o = 1;
      while (x != identity_) {
        x = mul(x, i);
        ++o;
      }
      order_[i] = o;
    }
  }

  const MatrixGroup& group() const { return *group_; }
  std::size_t size() const noexcept { return n_; }
  std::uint32_t identity() const noexcept { return identity_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return table_[a * n_ + b]; }
  std::uint32_t order(std::uint32_t a) const noexcept { return order_[a]; }

 private:
  const MatrixGroup* group_;
  std::size_t n_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> order_;
  std::uint32_t identity_ = 0;
};

/// Sorted element indices of a subgroup, plus a generating set.
struct IndexSubgroup {
  std::vector<std::uint32_t> elements;
  std::vector<std::uint32_t> generators;
};

struct IndexSetHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h = h * 1000003u ^ x;
    return h;
  }
};

/// Closure of `gens` in the table; nullopt once it exceeds max_order.
inline std::optional<std::vector<std::uint32_t>> close_indices(const CayleyTable& t,
                                                               std::span<const std::uint32_t> gens,
                                                               std::size_t max_order) {
  std::vector<char> in(t.size(), 0);
  std::vector<std::uint32_t> out{t.identity()};
  in[t.identity()] = 1;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (auto g : gens) {
      const std::uint32_t y = t.mul(out[head], g);
      if (in[y]) continue;
      in[y] = 1;
      out.push_back(y);
      if (out.size() > max_order) return std::nullopt;
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every subgroup K with |K| <= max_order, all elements in `candidates`, and
/// keep(K), where keep must be inherited by subgroups. Grows subgroups one
/// element at a time from the trivial group, so the enumeration is exhaustive
/// for such predicates.
inline std::vector<IndexSubgroup> enumerate_subgroups(const CayleyTable& t, std::span<const std::uint32_t> candidates,
                                                      const std::function<bool(const IndexSubgroup&)>& keep,
                                                      std::size_t max_order, std::size_t cap = 1'000'000) {
  std::unordered_set<std::vector<std::uint32_t>, IndexSetHash> seen;
  std::vector<IndexSubgroup> out;
  IndexSubgroup triv{{t.identity()}, {}};
  seen.insert(triv.elements);
  if (!keep(triv)) return out;
  out.push_back(triv);
  std::vector<char> mark(t.size());
  for (std::size_t head = 0; head < out.size(); ++head) {
    const IndexSubgroup h = out[head];
    std::fill(mark.begin(), mark.end(), 0);
    for (auto x : h.elements) mark[x] = 1;
    for (auto c : candidates) {
      if (mark[c]) continue;
      // <H, c> = <H, ch> = <H, hc>
      for (auto x : h.elements) mark[t.mul(c, x)] = mark[t.mul(x, c)] = 1;
      std::vector<std::uint32_t> gens = h.generators;
      gens.push_back(c);
      auto k = close_indices(t, gens, max_order);
      if (!k || !seen.insert(*k).second) continue;
      IndexSubgroup sub{std::move(*k), std::move(gens)};
      if (!keep(sub)) continue;
      if (out.size() >= cap) throw CapExceeded("subgroup search", cap);
      out.push_back(std::move(sub));
    }
  }
  return out;
}

inline MatrixGroup to_matrix_group(const CayleyTable& t, const IndexSubgroup& s) {
  const auto& el = t.group().elements();
  std::vector<Matrix> m;
  m.reserve(s.elements.size());
  for (auto i : s.elements) m.push_back(el[i]);
  return MatrixGroup::from_elements(t.group().field(), t.group().degree(), std::move(m));
}

/// True iff the orbit of points[0] under the element indices is all of `points`.
template <class Point>
bool acts_transitively(const CayleyTable& t, std::span<const std::uint32_t> elements, const std::vector<Point>& points) {
  if (points.empty()) return true;
  std::vector<Point> orb;
  for (auto i : elements) orb.push_back(act(points[0], t.group().elements()[i]));
  std::sort(orb.begin(), orb.end());
  orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
  std::vector<Point> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  return orb == sorted;
}

/// All subgroups of exactly `order` acting transitively on `points`.
template <class Point>
std::vector<MatrixGroup> search_transitive_subgroups(const MatrixGroup& g, std::size_t order,
                                                     const std::vector<Point>& points) {
  if (order == 0 || g.order() % order != 0) throw InvalidArgument("target order must divide the group order");
  CayleyTable t(g);
  std::vector<std::uint32_t> cand;
  for (std::uint32_t i = 0; i < t.size(); ++i)
    if (order % t.order(i) == 0) cand.push_back(i);
  auto subs = enumerate_subgroups(
      t, cand, [&](const IndexSubgroup& s) { return order % s.elements.size() == 0; }, order);
  std::vector<MatrixGroup> out;
  for (const auto& s : subs)
    if (s.elements.size() == order && acts_transitively(t, s.elements, points)) out.push_back(to_matrix_group(t, s));
  return out;
}

}  // namespace flagcodes
