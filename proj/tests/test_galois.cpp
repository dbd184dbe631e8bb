#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "flagcodes/galois.hpp"

using namespace flagcodes;

namespace {

// Naive arithmetic in GF(p)[x]/(f) on coefficient vectors, constant term first.
using IntPoly = std::vector<std::int64_t>;

IntPoly mulmod(const IntPoly& a, const IntPoly& b, const IntPoly& f, std::int64_t p) {
  const std::size_t d = f.size() - 1;
  IntPoly r(2 * d, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (std::size_t i = r.size(); i-- > d;) {
    const std::int64_t c = r[i];
    if (!c) continue;
    for (std::size_t j = 0; j <= d; ++j) r[i - d + j] = ((r[i - d + j] - c * f[j]) % p + p) % p;
  }
  r.resize(d);
  return r;
}

// Order of x in GF(p)[x]/(f), or 0 if x is not a unit of period dividing p^d - 1.
std::uint64_t order_of_x(const IntPoly& f, std::int64_t p) {
  const std::size_t d = f.size() - 1;
  IntPoly one(d, 0), x(d, 0), cur;
  one[0] = 1;
  if (d == 1) {
    x[0] = ((-f[0]) % p + p) % p;
  } else {
    x[1] = 1;
  }
  cur = x;
  std::uint64_t bound = 1;
  for (std::size_t i = 0; i < d; ++i) bound *= std::uint64_t(p);
  for (std::uint64_t n = 1; n < bound; ++n) {
    if (cur == one) return n;
    cur = mulmod(cur, x, f, p);
  }
  return 0;
}

bool naive_primitive(const IntPoly& f, std::int64_t p) {
  std::uint64_t full = 1;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) full *= std::uint64_t(p);
  return order_of_x(f, p) == full - 1;
}

std::vector<Code> to_codes(const IntPoly& f) { return {f.begin(), f.end()}; }

// All monic polynomials of degree d over GF(p), ascending in (f_0, ..., f_{d-1}) with f_0 most significant.
std::vector<IntPoly> monic_polys(std::int64_t p, std::size_t d) {
  std::vector<IntPoly> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= std::uint64_t(p);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    IntPoly f(d + 1, 0);
    f[d] = 1;
    std::uint64_t rem = idx;
    for (std::size_t i = d; i-- > 0;) {
      f[i] = std::int64_t(rem % std::uint64_t(p));
      rem /= std::uint64_t(p);
    }
    out.push_back(f);
  }
  return out;
}

std::uint64_t brute_order(const GaloisField& f, Code x) {
  Code c = x;
  std::uint64_t n = 1;
  while (c != 1) {
    c = f.mul(c, x);
    ++n;
  }
  return n;
}

}  // namespace

TEST(PrimitivePolynomials, MatchBruteForceOverPrimeFields) {
  for (auto [p, d] : std::vector<std::pair<std::int64_t, std::size_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    auto base = GaloisField::prime(std::uint32_t(p));
    bool first_found = false;
    for (const auto& f : monic_polys(p, d)) {
      const bool want = naive_primitive(f, p);
      EXPECT_EQ(is_primitive(*base, to_codes(f)), want) << "p=" << p << " d=" << d;
      if (want && !first_found) {
        EXPECT_EQ(smallest_primitive_polynomial(*base, unsigned(d)), to_codes(f));
        first_found = true;
      }
    }
    EXPECT_TRUE(first_found);
  }
}

TEST(PrimitivePolynomials, CountsMatchEulerPhiOverDegree) {
  // #primitive monic of degree d over GF(p) = phi(p^d - 1) / d
  auto phi = [](std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t i = 1; i <= n; ++i) c += std::gcd(i, n) == 1;
    return c;
  };
  for (auto [p, d] : std::vector<std::pair<std::int64_t, std::size_t>>{{2, 4}, {3, 3}, {5, 2}}) {
    auto base = GaloisField::prime(std::uint32_t(p));
    std::uint64_t n = 0, full = 1;
    for (std::size_t i = 0; i < d; ++i) full *= std::uint64_t(p);
    for (const auto& f : monic_polys(p, d)) n += is_primitive(*base, to_codes(f));
    EXPECT_EQ(n, phi(full - 1) / d);
  }
}

TEST(PrimitivePolynomials, NonPrimitiveOverridesAreRejectedWithReason) {
  TowerOverrides reducible;
  reducible.polys[1] = poly::Poly{1, 2, 1};  // (x + 1)^2 over GF(3)
  try {
    build_tower(3, 1, 2, reducible);
    FAIL() << "reducible polynomial accepted";
  } catch (const PrimitivityError& e) {
    EXPECT_EQ(e.reason(), PrimitivityError::Reason::reducible);
  }
  TowerOverrides small_order;
  small_order.polys[1] = poly::Poly{1, 0, 1};  // x^2 + 1 over GF(3): irreducible, x has order 4
  try {
    build_tower(3, 1, 2, small_order);
    FAIL() << "non-primitive polynomial accepted";
  } catch (const PrimitivityError& e) {
    EXPECT_EQ(e.reason(), PrimitivityError::Reason::subgroup_order);
  }
}

TEST(Tower, RejectsBadParameters) {
  EXPECT_THROW(build_tower(4, 1, 2), InvalidArgument);
  EXPECT_THROW(build_tower(1, 1, 2), InvalidArgument);
  EXPECT_THROW(build_tower(2, 0, 2), InvalidArgument);
  EXPECT_THROW(build_tower(2, 1, 0), InvalidArgument);
  EXPECT_THROW(build_tower(7, 1, 4), InvalidArgument);  // 7^8 beyond desk scale
  TowerOverrides wrong_degree;
  wrong_degree.polys[1] = poly::Poly{1, 1, 1, 1};
  EXPECT_THROW(build_tower(2, 1, 2, wrong_degree), InvalidArgument);
}

TEST(Tower, DefaultPolynomialsAreTheSmallestPrimitive) {
  struct Case {
    std::uint32_t p, e, k;
    std::vector<poly::Poly> polys;
  };
  const std::vector<Case> cases{
      {2, 1, 2, {{1, 1}, {1, 1, 1}, {2, 1, 1}}},
      {3, 1, 2, {{1, 1}, {2, 1, 1}, {3, 3, 1}}},
      {5, 1, 2, {{2, 1}, {2, 1, 1}, {5, 1, 1}}},
      {2, 2, 2, {{1, 1, 1}, {2, 1, 1}, {4, 2, 1}}},
  };
  for (const auto& c : cases) {
    const auto t = build_tower(c.p, c.e, c.k);
    EXPECT_EQ(t.polys(), c.polys) << c.p << "," << c.e << "," << c.k;
    for (int lvl = 1; lvl <= 3; ++lvl) {
      const auto& base = t.level(lvl - 1);
      const auto want = smallest_primitive_polynomial(base, unsigned(t.level(lvl).degree()));
      EXPECT_EQ(t.level(lvl).polynomial(), want);
    }
  }
}

TEST(Tower, LevelSizesAndSubfieldEmbedding) {
  for (auto [p, e, k] : std::vector<std::array<std::uint32_t, 3>>{{2, 1, 2}, {3, 1, 2}, {2, 1, 3}, {2, 2, 2}, {5, 1, 2}}) {
    const auto t = build_tower(p, e, k);
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= p;
    std::uint32_t qk = 1;
    for (std::uint32_t i = 0; i < k; ++i) qk *= q;
    EXPECT_EQ(t.q(), q);
    EXPECT_EQ(t.qk(), qk);
    EXPECT_EQ(t.q2k(), qk * qk);
    // Lower codes are the same elements one level up.
    for (int lvl = 1; lvl <= 3; ++lvl) {
      const auto& lo = t.level(lvl - 1);
      const auto& hi = t.level(lvl);
      for (Code a = 0; a < lo.size(); ++a)
        for (Code b = 0; b < lo.size(); ++b) {
          ASSERT_EQ(hi.add(a, b), lo.add(a, b));
          ASSERT_EQ(hi.mul(a, b), lo.mul(a, b));
        }
    }
  }
}

TEST(FieldArithmetic, MatchesNaivePolynomialModel) {
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 4}, {3, 2}, {3, 4}, {5, 2}}) {
    auto base = GaloisField::prime(p);
    const auto fpoly = smallest_primitive_polynomial(*base, unsigned(d));
    auto f = GaloisField::extension(base, fpoly);
    const IntPoly fi(fpoly.begin(), fpoly.end());
    for (Code a = 0; a < f->size(); ++a) {
      const auto ca = f->coefficients(a);
      const IntPoly ia(ca.begin(), ca.end());
      for (Code b = 0; b < f->size(); ++b) {
        const auto cb = f->coefficients(b);
        const IntPoly ib(cb.begin(), cb.end());
        const auto prod = mulmod(ia, ib, fi, p);
        std::vector<Code> want(prod.begin(), prod.end());
        ASSERT_EQ(f->coefficients(f->mul(a, b)), want);
        std::vector<Code> sum(d);
        for (std::size_t i = 0; i < d; ++i) sum[i] = Code((ca[i] + cb[i]) % p);
        ASSERT_EQ(f->coefficients(f->add(a, b)), sum);
      }
    }
  }
}

TEST(FieldArithmetic, AxiomsAcrossTheTower) {
  const auto t = build_tower(2, 2, 2);  // GF(2) < GF(4) < GF(16) < GF(256)
  for (int lvl = 0; lvl <= 2; ++lvl) {
    const auto& f = t.level(lvl);
    for (Code a = 0; a < f.size(); ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      }
      for (Code b = 0; b < f.size(); ++b)
        for (Code c = 0; c < f.size(); ++c) {
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
          ASSERT_EQ(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        }
    }
  }
  EXPECT_THROW(t.gf_qk().inv(0), InvalidArgument);
}

TEST(FieldArithmetic, CoefficientsRoundTrip) {
  const auto t = build_tower(3, 1, 2);
  for (int lvl = 1; lvl <= 3; ++lvl)
    for (Code x = 0; x < t.level(lvl).size(); ++x) {
      const FieldElement el = t.element(lvl, x);
      EXPECT_EQ(t.from_coefficients(lvl, t.coefficients(el)), el);
      EXPECT_EQ(t.encode(t.decode(lvl, x)), x);
    }
  EXPECT_THROW(t.element(2, 9), InvalidArgument);
  const std::vector<Code> too_big{3, 0};
  EXPECT_THROW(t.from_coefficients(2, too_big), InvalidArgument);
}

TEST(ElementOrder, MatchesRepeatedMultiplication) {
  for (auto [p, e, k] : std::vector<std::array<std::uint32_t, 3>>{{2, 1, 2}, {3, 1, 2}, {2, 2, 2}}) {
    const auto t = build_tower(p, e, k);
    for (int lvl = 0; lvl <= 3; ++lvl) {
      const auto& f = t.level(lvl);
      for (Code x = 1; x < f.size(); ++x) ASSERT_EQ(element_order(t, {lvl, x}), brute_order(f, x));
      EXPECT_EQ(element_order(t, {lvl, f.primitive_element()}), f.size() - 1);
    }
    EXPECT_EQ(element_order(t, {3, t.omega()}), std::uint64_t(t.q2k()) - 1);
    EXPECT_EQ(element_order(t, {2, t.alpha()}), std::uint64_t(t.qk()) - 1);
    EXPECT_THROW(element_order(t, {2, 0}), InvalidArgument);
  }
}

TEST(CompanionMatrix, ShapeAndOrder) {
  for (auto [p, e, k] : std::vector<std::array<std::uint32_t, 3>>{{2, 1, 2}, {3, 1, 2}, {2, 1, 3}, {2, 2, 2}}) {
    const auto t = build_tower(p, e, k);
    const Matrix& P = t.companion();
    const auto& f = t.gf_qk().polynomial();
    ASSERT_EQ(P.rows(), k);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) EXPECT_EQ(P(i, j), j == i + 1 ? 1u : 0u);
    }
    for (std::size_t j = 0; j < k; ++j) EXPECT_EQ(P(k - 1, j), t.gf_q().neg(f[j]));
    // P has multiplicative order q^k - 1 exactly.
    const Matrix I = Matrix::identity(t.gf_q(), k);
    Matrix pw = P;
    std::uint64_t n = 1;
    while (pw != I) {
      pw = pw * P;
      ++n;
    }
    EXPECT_EQ(n, std::uint64_t(t.qk()) - 1);
    EXPECT_NE(determinant(P), 0u);
  }
  const auto t = build_tower(2, 1, 2);
  EXPECT_THROW(companion_matrix(t.gf_q(), poly::Poly{1, 1, 0}), InvalidArgument);
}

TEST(CompanionMatrix, DeterminantMatchesLeibnizExpansion) {
  for (auto [p, e, k] : std::vector<std::array<std::uint32_t, 3>>{{3, 1, 2}, {2, 1, 3}, {5, 1, 2}, {3, 1, 3}}) {
    const auto t = build_tower(p, e, k);
    const auto& f = t.gf_q();
    const Matrix& P = t.companion();
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Code det = 0;
    do {
      std::size_t inv = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) inv += perm[i] > perm[j];
      Code term = 1;
      for (std::size_t i = 0; i < k; ++i) term = f.mul(term, P(i, perm[i]));
      det = inv % 2 ? f.sub(det, term) : f.add(det, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(determinant(P), det);
  }
}

TEST(FieldIso, IsARingMonomorphism) {
  for (auto [p, e, k] : std::vector<std::array<std::uint32_t, 3>>{{2, 1, 2}, {3, 1, 2}, {2, 1, 3}, {2, 2, 2}}) {
    const auto t = build_tower(p, e, k);
    const auto& F = t.gf_qk();
    EXPECT_EQ(t.field_iso(t.alpha()), t.companion());
    EXPECT_EQ(t.field_iso(1), Matrix::identity(t.gf_q(), k));
    EXPECT_TRUE(t.field_iso(0).is_zero());
    std::vector<Matrix> images;
    for (Code a = 0; a < F.size(); ++a) {
      ASSERT_EQ(t.field_iso(a), t.field_iso_by_definition(a));
      images.push_back(t.field_iso(a));
      for (Code b = 0; b < F.size(); ++b) {
        ASSERT_EQ(t.field_iso(F.add(a, b)), t.field_iso(a) + t.field_iso(b));
        ASSERT_EQ(t.field_iso(F.mul(a, b)), t.field_iso(a) * t.field_iso(b));
      }
    }
    std::sort(images.begin(), images.end());
    EXPECT_EQ(std::unique(images.begin(), images.end()), images.end());
    // phi(alpha^i) = P^i
    Matrix pw = Matrix::identity(t.gf_q(), k);
    for (std::uint64_t i = 0; i + 1 < F.size(); ++i) {
      ASSERT_EQ(t.field_iso(F.exp(i)), pw);
      pw = pw * t.companion();
    }
    EXPECT_THROW(field_iso(t, {3, 1}), InvalidArgument);
    EXPECT_THROW(t.field_iso(F.size()), InvalidArgument);
  }
}
