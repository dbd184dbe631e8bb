#include <gtest/gtest.h>

#include <array>
#include <map>
#include <set>
#include <vector>

#include "flagcodes/linear_groups.hpp"
#include "flagcodes/spread.hpp"

using namespace flagcodes;

namespace {

using Vec = std::vector<Code>;
using Params = std::array<std::uint32_t, 3>;

const std::vector<Params> kParams{{2, 1, 2}, {3, 1, 2}, {2, 1, 3}, {2, 2, 2}, {5, 1, 2}};

std::set<Vec> vectors_of(const Matrix& m) {
  const GaloisField& f = m.field();
  std::set<Vec> out;
  std::vector<Code> coef(m.rows(), 0);
  while (true) {
    Vec v(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v[j] = f.add(v[j], f.mul(coef[i], m(i, j)));
    out.insert(v);
    std::size_t t = 0;
    while (t < coef.size() && ++coef[t] == f.size()) coef[t++] = 0;
    if (t == coef.size()) break;
  }
  return out;
}

// F_q-points of the line rowsp(x1, x2): {(c x1, c x2) : c in GF(q^k)} in coordinates.
std::set<Vec> reduced_points(const FieldTower& t, Code x1, Code x2) {
  const auto& F = t.gf_qk();
  std::set<Vec> out;
  for (Code c = 0; c < F.size(); ++c) {
    Vec v = F.coefficients(F.mul(c, x1));
    const Vec w = F.coefficients(F.mul(c, x2));
    v.insert(v.end(), w.begin(), w.end());
    out.insert(v);
  }
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

class SpreadParams : public ::testing::TestWithParam<Params> {};

TEST_P(SpreadParams, SegreSpreadPartitionsTheNonzeroVectors) {
  const auto [p, e, k] = GetParam();
  const auto t = build_tower(p, e, k);
  const auto S = build_segre_spread(t);
  const std::uint64_t q = t.q();
  EXPECT_EQ(S.size(), (ipow(q, 2 * k) - 1) / (ipow(q, k) - 1));
  EXPECT_EQ(S.size(), t.qk() + 1u);
  EXPECT_TRUE(is_spread(S));
  EXPECT_EQ(code_min_distance(S), 2u * k);
  std::map<Vec, int> hits;
  for (const auto& s : S.members())
    for (const auto& v : vectors_of(s.basis())) ++hits[v];
  EXPECT_EQ(hits.size(), ipow(q, 2 * k));
  for (const auto& [v, n] : hits) {
    const bool zero = std::all_of(v.begin(), v.end(), [](Code c) { return c == 0; });
    ASSERT_EQ(n, zero ? int(S.size()) : 1);
  }
  EXPECT_TRUE(S.contains(U_k(t)));
  EXPECT_TRUE(S.contains(V_k(t)));
}

TEST_P(SpreadParams, FieldReductionMatchesScalarMultiplesAndHitsTheSpread) {
  const auto [p, e, k] = GetParam();
  const auto t = build_tower(p, e, k);
  const auto S = build_segre_spread(t);
  std::vector<Subspace> images;
  for (const auto& l : all_lines(t)) {
    const Subspace img = field_reduction(t, l);
    ASSERT_EQ(img.dim(), k);
    ASSERT_EQ(vectors_of(img.basis()), reduced_points(t, l.basis()(0, 0), l.basis()(0, 1)));
    images.push_back(img);
  }
  EXPECT_EQ(images.size(), t.qk() + 1u);
  EXPECT_EQ(SubspaceCode(t.gf_q(), 2 * k, k, images), S);
  EXPECT_EQ(field_reduction(t, make_line(t, 1, 0)), U_k(t));
  EXPECT_EQ(field_reduction(t, make_line(t, 0, 1)), V_k(t));
  // A scaled generator gives the same line and the same image.
  EXPECT_EQ(field_reduction(t, make_line(t, t.alpha(), t.gf_qk().mul(t.alpha(), t.alpha()))),
            field_reduction(t, make_line(t, 1, t.alpha())));
}

TEST_P(SpreadParams, PsiIsAMonomorphismOnSamples) {
  const auto [p, e, k] = GetParam();
  const auto t = build_tower(p, e, k);
  const auto& F = t.gf_qk();
  Rng rng(2024);
  for (int it = 0; it < 200; ++it) {
    const Matrix a = random_invertible(rng, F, 2), b = random_invertible(rng, F, 2);
    ASSERT_EQ(psi(t, a * b), psi(t, a) * psi(t, b));
    ASSERT_EQ(psi(t, inverse(a)), inverse(psi(t, a)));
    if (a != b) {
      ASSERT_NE(psi(t, a), psi(t, b));
    }
  }
  EXPECT_EQ(psi(t, Matrix::identity(F, 2)), Matrix::identity(t.gf_q(), 2 * k));
  const auto rep = action_equivalence_check(t, 100, 9);
  EXPECT_TRUE(rep.passed()) << rep.violations.front();
}

INSTANTIATE_TEST_SUITE_P(Towers, SpreadParams, ::testing::ValuesIn(kParams), [](const auto& info) {
  return "p" + std::to_string(info.param[0]) + "e" + std::to_string(info.param[1]) + "k" + std::to_string(info.param[2]);
});

TEST(Psi, ExhaustiveOverGL2Of4) {
  const auto t = build_tower(2, 1, 2);
  const auto gl = close_group(t.gf_qk(), 2, {Matrix(t.gf_qk(), {{1, 0}, {0, t.alpha()}}), Matrix(t.gf_qk(), {{1, 1}, {1, 0}})});
  ASSERT_EQ(gl.order(), 180u);  // |GL(2,4)| = (16-1)(16-4)
  std::set<Matrix> images;
  for (const auto& a : gl.elements()) {
    images.insert(psi(t, a));
    for (const auto& b : gl.elements()) ASSERT_EQ(psi(t, a * b), psi(t, a) * psi(t, b));
  }
  EXPECT_EQ(images.size(), 180u);
  const auto rep = action_equivalence_check(t, gl.elements());
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.computed, 180u * 5u);
}

TEST(Psi, RejectsBadInput) {
  const auto t = build_tower(3, 1, 2);
  const auto& F = t.gf_qk();
  const Code a = t.alpha();
  EXPECT_THROW(psi(t, Matrix(F, {{1, a}, {2, F.mul(2, a)}})), InvalidArgument);  // second row = 2 * first
  EXPECT_THROW(psi(t, Matrix::identity(t.gf_qk(), 3)), InvalidArgument);
  EXPECT_THROW(psi(t, Matrix::identity(t.gf_q(), 2)), InvalidArgument);
  EXPECT_THROW(make_line(t, 0, 0), InvalidArgument);
  EXPECT_THROW(field_reduction(t, U_k(t)), InvalidArgument);
}

TEST(Spread, EquivarianceCatchesABrokenMap) {
  // Transposed blocks are not the same monomorphism; equivariance should fail somewhere.
  const auto t = build_tower(3, 1, 2);
  Rng rng(1);
  bool broke = false;
  const auto lines = all_lines(t);
  for (int it = 0; it < 50 && !broke; ++it) {
    const Matrix a = random_invertible(rng, t.gf_qk(), 2);
    const Matrix wrong = psi(t, a.transpose());
    for (const auto& l : lines)
      if (field_reduction(t, l * a) != field_reduction(t, l) * wrong) broke = true;
  }
  EXPECT_TRUE(broke);
}
