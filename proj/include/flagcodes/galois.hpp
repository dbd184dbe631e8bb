#pragma once

// The four-level tower GF(p) <= GF(q) <= GF(q^k) <= GF(q^2k), the companion
// matrix of a level polynomial and the isomorphism GF(q^k) -> GF(q)[P].

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flagcodes/errors.hpp"
#include "flagcodes/field.hpp"
#include "flagcodes/matrix.hpp"
#include "flagcodes/number_theory.hpp"

namespace flagcodes {

enum TowerLevel : int {
  kPrimeLevel = 0,  // GF(p)
  kBaseLevel = 1,   // GF(q), q = p^e
  kSubLevel = 2,    // GF(q^k)
  kTopLevel = 3,    // GF(q^2k), built as a quadratic extension of GF(q^k)
};

struct FieldElement {
  int level = 0;
  Code code = 0;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Explicit primitive polynomials for levels 1..3 (constant term first, monic).
struct TowerOverrides {
  std::array<std::optional<poly::Poly>, 3> polys;
};

/// Lexicographically smallest monic primitive polynomial of degree d over
/// `base`, reading (p_0, ..., p_{d-1}) with p_0 most significant.
inline poly::Poly smallest_primitive_polynomial(const GaloisField& base, unsigned d) {
  const std::uint64_t q = base.size();
  const std::uint64_t total = checked_pow(q, d);
  poly::Poly f(d + 1, 0);
  f[d] = 1;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rem = idx;
    for (std::size_t i = d; i-- > 0;) {
      f[i] = Code(rem % q);
      rem /= q;
    }
    if (is_primitive(base, f)) return f;
  }
  throw InternalError("no primitive polynomial found");
}

inline Matrix companion_matrix(const GaloisField& level, const poly::Poly& f) {
  const int d = poly::degree(f);
  if (d < 1) throw InvalidArgument("companion matrix needs degree >= 1");
  if (f.size() != std::size_t(d) + 1 || f.back() != 1) throw InvalidArgument("companion matrix of a non-monic polynomial");
  const std::size_t n = std::size_t(d);
  Matrix m(level, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
  for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = level.neg(f[j]);
  return m;
}

class FieldTower {
 public:
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return levels_[kBaseLevel]->size(); }
  std::uint32_t qk() const noexcept { return levels_[kSubLevel]->size(); }
  std::uint32_t q2k() const noexcept { return levels_[kTopLevel]->size(); }

  const GaloisField& level(int i) const { return *levels_.at(std::size_t(i)); }
  std::shared_ptr<const GaloisField> level_ptr(int i) const { return levels_.at(std::size_t(i)); }
  const GaloisField& gf_q() const { return level(kBaseLevel); }
  const GaloisField& gf_qk() const { return level(kSubLevel); }
  const GaloisField& gf_q2k() const { return level(kTopLevel); }

  /// Primitive element of GF(q^k).
  Code alpha() const { return gf_qk().primitive_element(); }
  /// Primitive element of GF(q^2k).
  Code omega() const { return gf_q2k().primitive_element(); }

  /// Level polynomials for levels 1..3.
  std::vector<poly::Poly> polys() const {
    return {level(1).polynomial(), level(2).polynomial(), level(3).polynomial()};
  }

  /// Companion matrix P of the GF(q^k) polynomial, k x k over GF(q).
  const Matrix& companion() const { return companion_; }

  FieldElement element(int lvl, Code c) const {
    if (!level(lvl).contains(c)) throw InvalidArgument("code outside level");
    return {lvl, c};
  }
  FieldElement decode(int lvl, Code c) const { return element(lvl, c); }
  Code encode(const FieldElement& x) const { return element(x.level, x.code).code; }
  std::vector<Code> coefficients(const FieldElement& x) const { return level(x.level).coefficients(x.code); }
  FieldElement from_coefficients(int lvl, std::span<const Code> c) const {
    return {lvl, level(lvl).from_coefficients(c)};
  }

  /// phi(sum a_i alpha^i) = sum a_i P^i, from the cached table when present.
  Matrix field_iso(Code x) const {
    if (!gf_qk().contains(x)) throw InvalidArgument("field_iso expects an element of GF(q^k)");
    if (!iso_table_.empty()) return iso_table_[x];
    return field_iso_by_definition(x);
  }

  Matrix field_iso_by_definition(Code x) const {
    const auto a = gf_qk().coefficients(x);
    Matrix acc(gf_q(), k_, k_);
    Matrix pw = Matrix::identity(gf_q(), k_);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i]) acc = acc + a[i] * pw;
      pw = pw * companion_;
    }
    return acc;
  }

 private:
  friend FieldTower build_tower(std::uint32_t, std::uint32_t, std::uint32_t, const TowerOverrides&);
  std::uint32_t p_ = 0, e_ = 0, k_ = 0;
  std::array<std::shared_ptr<const GaloisField>, 4> levels_;
  Matrix companion_;
  std::vector<Matrix> iso_table_;
};

inline FieldTower build_tower(std::uint32_t p, std::uint32_t e, std::uint32_t k, const TowerOverrides& overrides = {}) {
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (e < 1 || k < 1) throw InvalidArgument("e and k must be positive");
  const std::uint64_t top = checked_pow(checked_pow(p, e), 2 * k);
  if (top > kMaxFieldSize) throw InvalidArgument("GF(q^2k) of size " + std::to_string(top) + " is beyond desk scale");

  FieldTower t;
  t.p_ = p;
  t.e_ = e;
  t.k_ = k;
  t.levels_[0] = GaloisField::prime(p);
  const std::array<unsigned, 3> degrees{e, k, 2};
  for (std::size_t i = 0; i < 3; ++i) {
    const GaloisField& base = *t.levels_[i];
    poly::Poly f = overrides.polys[i] ? *overrides.polys[i] : smallest_primitive_polynomial(base, degrees[i]);
    if (poly::degree(f) != int(degrees[i]))
      throw InvalidArgument("override polynomial for level " + std::to_string(i + 1) + " has degree " +
                            std::to_string(poly::degree(f)) + ", expected " + std::to_string(degrees[i]));
    t.levels_[i + 1] = GaloisField::extension(t.levels_[i], std::move(f));
  }
  t.companion_ = companion_matrix(t.gf_q(), t.gf_qk().polynomial());
  if (t.qk() <= 65536) {
    t.iso_table_.reserve(t.qk());
    for (Code x = 0; x < t.qk(); ++x) t.iso_table_.push_back(t.field_iso_by_definition(x));
  }
  return t;
}

/// Multiplicative order of a nonzero element.
inline std::uint64_t element_order(const FieldTower& t, const FieldElement& x) {
  const GaloisField& f = t.level(x.level);
  if (x.code == 0) throw InvalidArgument("order of zero");
  return order_by_descent(x.code, Code{1}, std::uint64_t(f.size() - 1),
                          [&](Code a, std::uint64_t m) { return f.pow(a, m); });
}

/// Primitivity over a tower level; thin wrapper over check_primitive.
inline bool is_primitive(const FieldTower& t, int level, const poly::Poly& f) { return is_primitive(t.level(level), f); }

inline Matrix field_iso(const FieldTower& t, const FieldElement& x) {
  if (x.level != kSubLevel) throw InvalidArgument("field_iso expects an element of GF(q^k)");
  return t.field_iso(x.code);
}

}  // namespace flagcodes
