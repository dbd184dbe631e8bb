#pragma once

// A single finite-field level, stored as exp/log tables over the canonical
// integer encoding, plus polynomial arithmetic over such a level.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flagcodes/errors.hpp"
#include "flagcodes/number_theory.hpp"

namespace flagcodes {

/// Canonical integer encoding of a field element. An element sum_i a_i b^i over
/// a sub-level S encodes as sum_i code(a_i) * |S|^i, so the encoding at every
/// level is the base-p digit string of its GF(p) coordinates.
using Code = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldSize = 1u << 20;

class GaloisField {
 public:
  static std::shared_ptr<const GaloisField> prime(std::uint32_t p);

  /// Extension of `base` by a monic primitive polynomial (constant term first).
  /// Throws PrimitivityError if the polynomial is not primitive.
  static std::shared_ptr<const GaloisField> extension(std::shared_ptr<const GaloisField> base,
                                                      std::vector<Code> poly);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t size() const noexcept { return size_; }
  std::uint32_t degree() const noexcept { return degree_; }
  const GaloisField* base() const noexcept { return base_.get(); }
  const std::vector<Code>& polynomial() const noexcept { return poly_; }
  Code primitive_element() const noexcept { return exp_[1]; }
  bool is_prime_field() const noexcept { return base_ == nullptr; }
  bool contains(Code a) const noexcept { return a < size_; }

  Code add(Code a, Code b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[std::size_t{a} * size_ + b];
    Code r = 0;
    for (std::uint32_t i = 0, w = 1; i < digits_; ++i, w *= p_)
      r += ((a / w % p_ + b / w % p_) % p_) * w;
    return r;
  }
  Code neg(Code a) const noexcept { return neg_[a]; }
  Code sub(Code a, Code b) const noexcept { return add(a, neg_[b]); }
  Code mul(Code a, Code b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[std::size_t(log_[a]) + std::size_t(log_[b])];
  }
  Code inv(Code a) const {
    if (a == 0) throw InvalidArgument("inverse of zero");
    return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  }
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(std::uint64_t(log_[a]) * (e % (size_ - 1))) % (size_ - 1)];
  }
  /// Discrete log to the primitive element; a must be nonzero.
  std::uint32_t log(Code a) const {
    if (a == 0) throw InvalidArgument("log of zero");
    return std::uint32_t(log_[a]);
  }
  Code exp(std::uint64_t i) const noexcept { return exp_[i % (size_ - 1)]; }

  /// Coordinates over the base level (the prime field is its own base, degree 1).
  std::vector<Code> coefficients(Code x) const {
    const std::uint32_t bs = base_ ? base_->size() : p_;
    std::vector<Code> c(degree_);
    for (auto& ci : c) {
      ci = x % bs;
      x /= bs;
    }
    return c;
  }
  Code from_coefficients(std::span<const Code> c) const {
    const std::uint32_t bs = base_ ? base_->size() : p_;
    if (c.size() != degree_) throw InvalidArgument("coefficient vector length differs from extension degree");
    Code x = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] >= bs) throw InvalidArgument("coefficient outside base level");
      x = x * bs + c[i];
    }
    return x;
  }

 private:
  GaloisField() = default;
  void finish_tables(const std::vector<Code>& powers);

  std::uint32_t p_ = 0;
  std::uint32_t size_ = 0;
  std::uint32_t degree_ = 1;
  std::uint32_t digits_ = 1;
  std::shared_ptr<const GaloisField> base_;
  std::vector<Code> poly_;
  std::vector<Code> exp_;  // length 2(size-1)
  std::vector<std::int32_t> log_;
  std::vector<Code> neg_;
  std::vector<std::uint16_t> add_table_;
};

// ---------------------------------------------------------------------------
// Polynomials over a field level: coefficient vectors, constant term first.

namespace poly {

using Poly = std::vector<Code>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int degree(const Poly& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) return int(i);
  return -1;
}
inline Poly sub(const GaloisField& f, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}
inline Poly mul(const GaloisField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}
/// Remainder of a modulo a nonzero m.
inline Poly mod(const GaloisField& f, Poly a, const Poly& m) {
  const int dm = degree(m);
  if (dm < 0) throw InvalidArgument("polynomial division by zero");
  const Code lead_inv = f.inv(m[std::size_t(dm)]);
  trim(a);
  while (degree(a) >= dm) {
    const int da = degree(a);
    const Code c = f.mul(a[std::size_t(da)], lead_inv);
    const std::size_t shift = std::size_t(da - dm);
    for (int i = 0; i <= dm; ++i) a[shift + std::size_t(i)] = f.sub(a[shift + std::size_t(i)], f.mul(c, m[std::size_t(i)]));
    trim(a);
  }
  return a;
}
inline Poly powmod(const GaloisField& f, Poly b, std::uint64_t e, const Poly& m) {
  Poly r = mod(f, Poly{1}, m);
  b = mod(f, std::move(b), m);
  while (e > 0) {
    if (e & 1) r = mod(f, mul(f, r, b), m);
    e >>= 1;
    if (e) b = mod(f, mul(f, b, b), m);
  }
  return r;
}
/// Monic gcd.
inline Poly gcd(const GaloisField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Code li = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, li);
  }
  return a;
}

}  // namespace poly

// ---------------------------------------------------------------------------

struct PrimitivityCheck {
  bool irreducible = false;
  bool full_order = false;  // class of x has order |level|^deg - 1
  bool primitive() const noexcept { return irreducible && full_order; }
};

class PrimitivityError : public InvalidArgument {
 public:
  enum class Reason { reducible, subgroup_order };
  PrimitivityError(Reason r, const std::string& what)
      : InvalidArgument(what + (r == Reason::reducible ? ": polynomial is reducible"
                                                       : ": root does not generate the multiplicative group")),
        reason_(r) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// Primitivity of a monic polynomial of degree >= 1 over `base`.
/// Irreducibility is Ben-Or's test; the order test strips each maximal divisor
/// of |level|^deg - 1.
inline PrimitivityCheck check_primitive(const GaloisField& base, const poly::Poly& f) {
  const int d = poly::degree(f);
  if (d < 1) throw InvalidArgument("primitivity test needs degree >= 1");
  if (f.size() != std::size_t(d) + 1 || f.back() != 1) throw InvalidArgument("polynomial is not monic");
  for (Code c : f)
    if (!base.contains(c)) throw InvalidArgument("coefficient outside base level");

  PrimitivityCheck out;
  const poly::Poly x{0, 1};
  out.irreducible = true;
  poly::Poly h = poly::mod(base, x, f);
  for (int i = 1; i <= d / 2 && out.irreducible; ++i) {
    h = poly::powmod(base, h, base.size(), f);
    if (poly::degree(poly::gcd(base, poly::sub(base, h, x), f)) > 0) out.irreducible = false;
  }
  if (!out.irreducible) return out;

  const std::uint64_t order = checked_pow(base.size(), unsigned(d)) - 1;
  const poly::Poly one = poly::mod(base, poly::Poly{1}, f);
  out.full_order = poly::powmod(base, x, order, f) == one;
  for (const auto& [r, e] : factorize(order)) {
    (void)e;
    if (!out.full_order) break;
    if (poly::powmod(base, x, order / r, f) == one) out.full_order = false;
  }
  return out;
}

inline bool is_primitive(const GaloisField& base, const poly::Poly& f) { return check_primitive(base, f).primitive(); }

// ---------------------------------------------------------------------------

inline void GaloisField::finish_tables(const std::vector<Code>& powers) {
  const std::uint32_t n = size_ - 1;
  exp_.assign(2 * std::size_t(n), 0);
  log_.assign(size_, -1);
  for (std::uint32_t i = 0; i < n; ++i) {
    const Code v = powers[i];
    if (v >= size_ || log_[v] != -1) throw InternalError("generator powers repeat before the full period");
    log_[v] = std::int32_t(i);
    exp_[i] = exp_[i + n] = v;
  }
  digits_ = 0;
  for (std::uint32_t s = 1; s < size_; s *= p_) ++digits_;
  neg_.resize(size_);
  for (Code a = 0; a < size_; ++a) {
    Code r = 0;
    for (std::uint32_t i = 0, w = 1; i < digits_; ++i, w *= p_) r += ((p_ - a / w % p_) % p_) * w;
    neg_[a] = r;
  }
  if (p_ != 2 && size_ <= 1024) {
    add_table_.resize(std::size_t(size_) * size_);
    for (Code a = 0; a < size_; ++a)
      for (Code b = 0; b < size_; ++b) {
        Code r = 0;
        for (std::uint32_t i = 0, w = 1; i < digits_; ++i, w *= p_) r += ((a / w % p_ + b / w % p_) % p_) * w;
        add_table_[std::size_t(a) * size_ + b] = std::uint16_t(r);
      }
  }
}

inline std::shared_ptr<const GaloisField> GaloisField::prime(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  if (p > kMaxFieldSize) throw InvalidArgument("prime too large");
  std::shared_ptr<GaloisField> f(new GaloisField());
  f->p_ = p;
  f->size_ = p;
  f->degree_ = 1;
  std::vector<Code> powers;
  if (p == 2) {
    powers = {1};
  } else {
    const auto fac = factorize(p - 1);
    for (Code g = 2; g < p; ++g) {
      bool ok = true;
      for (const auto& [r, e] : fac) {
        (void)e;
        std::uint64_t acc = 1, b = g, ex = (p - 1) / r;
        while (ex) {
          if (ex & 1) acc = acc * b % p;
          b = b * b % p;
          ex >>= 1;
        }
        if (acc == 1) ok = false;
      }
      if (!ok) continue;
      powers.resize(p - 1);
      std::uint64_t v = 1;
      for (auto& pw : powers) {
        pw = Code(v);
        v = v * g % p;
      }
      break;
    }
  }
  f->finish_tables(powers);
  return f;
}

inline std::shared_ptr<const GaloisField> GaloisField::extension(std::shared_ptr<const GaloisField> base,
                                                                 std::vector<Code> poly) {
  if (!base) throw InvalidArgument("extension needs a base level");
  const PrimitivityCheck chk = check_primitive(*base, poly);
  const std::string label = "extension polynomial of degree " + std::to_string(poly.size() - 1);
  if (!chk.irreducible) throw PrimitivityError(PrimitivityError::Reason::reducible, label);
  if (!chk.full_order) throw PrimitivityError(PrimitivityError::Reason::subgroup_order, label);

  const std::uint32_t d = std::uint32_t(poly.size() - 1);
  const std::uint64_t size = checked_pow(base->size(), d);
  if (size > kMaxFieldSize) throw InvalidArgument("field of size " + std::to_string(size) + " is beyond desk scale");

  std::shared_ptr<GaloisField> f(new GaloisField());
  f->p_ = base->characteristic();
  f->size_ = std::uint32_t(size);
  f->degree_ = d;
  f->base_ = base;
  f->poly_ = std::move(poly);

  // Powers of x in base[x]/(poly): multiply the coordinate vector by x.
  const GaloisField& b = *base;
  std::vector<Code> powers(size - 1);
  std::vector<Code> c(d, 0);
  c[0] = 1;
  for (auto& pw : powers) {
    Code code = 0;
    for (std::size_t i = d; i-- > 0;) code = code * b.size() + c[i];
    pw = code;
    const Code top = c[d - 1];
    for (std::size_t i = d - 1; i >= 1; --i) c[i] = b.sub(c[i - 1], b.mul(top, f->poly_[i]));
    c[0] = b.neg(b.mul(top, f->poly_[0]));
  }
  f->finish_tables(powers);
  return f;
}

}  // namespace flagcodes
