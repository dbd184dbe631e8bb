#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flagcodes/flag_orbits.hpp"
#include "flagcodes/random.hpp"

using namespace flagcodes;

namespace {

using Params = std::array<std::uint32_t, 3>;

// All flags of the given type, by chaining Grassmannians under containment.
std::vector<Flag> all_flags(const GaloisField& f, std::size_t n, const std::vector<std::size_t>& type) {
  std::vector<std::vector<Subspace>> levels;
  for (auto t : type) levels.push_back(enumerate_grassmannian(f, t, n));
  std::vector<Flag> out;
  std::vector<Subspace> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == type.size()) {
      out.emplace_back(cur);
      return;
    }
    for (const auto& s : levels[i]) {
      if (i > 0 && !s.contains(cur.back())) continue;
      cur.push_back(s);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Subspace span(const GaloisField& f, std::initializer_list<std::initializer_list<Code>> rows) {
  return Subspace::from(Matrix(f, rows));
}

}  // namespace

TEST(Flag, ValidatesNesting) {
  auto f = GaloisField::prime(2);
  const auto e1 = span(*f, {{1, 0, 0, 0}}), e2 = span(*f, {{0, 1, 0, 0}});
  const auto e12 = span(*f, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  EXPECT_NO_THROW(Flag({e1, e12}));
  EXPECT_THROW(Flag({e12, e1}), InvalidArgument);
  EXPECT_THROW(Flag({e1, e2}), InvalidArgument);
  EXPECT_THROW(Flag({e1, span(*f, {{1, 0, 0}, {0, 1, 0}})}), InvalidArgument);
  EXPECT_THROW(Flag({Subspace::zero(*f, 4), e1}), InvalidArgument);
  EXPECT_THROW(Flag({e1, Subspace::whole(*f, 4)}), InvalidArgument);
  EXPECT_THROW(Flag(std::vector<Subspace>{}), InvalidArgument);
  const Flag fl({e1, e12});
  EXPECT_EQ(fl.type(), (std::vector<std::size_t>{1, 2}));
  EXPECT_FALSE(fl.is_full());
  EXPECT_TRUE(standard_full_flag(*f, 4).is_full());
}

TEST(Flag, CountOfFullFlagsOfF2To4) {
  auto f = GaloisField::prime(2);
  // [4]_2! = 1 * 3 * 7 * 15
  EXPECT_EQ(all_flags(*f, 4, full_type(4)).size(), 315u);
  EXPECT_EQ(all_flags(*f, 3, full_type(3)).size(), 21u);
}

TEST(FlagDistance, SwapImageOfTheStandardFlag) {
  const auto t = build_tower(2, 1, 2);
  const auto& f = t.gf_q();
  const Flag F = standard_full_flag(f, 4);
  const Flag G = F * swap_matrix(f, 2);
  EXPECT_EQ(G[0], span(f, {{0, 0, 1, 0}}));
  EXPECT_EQ(G[1], span(f, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(subspace_distance(F[0], G[0]), 2u);
  EXPECT_EQ(subspace_distance(F[1], G[1]), 4u);
  EXPECT_EQ(subspace_distance(F[2], G[2]), 2u);
  EXPECT_EQ(flag_distance(F, G), 8u);
  EXPECT_EQ(flag_distance(F, F), 0u);
  EXPECT_THROW(flag_distance(F, Flag({F[0], F[1]})), InvalidArgument);
}

TEST(FlagDistance, BoundIsTheBruteForceMaximum) {
  auto f = GaloisField::prime(2);
  for (std::size_t n : {3u, 4u, 5u}) {
    std::vector<std::vector<std::size_t>> types{full_type(n)};
    if (n == 4) types.insert(types.end(), {{1, 3}, {2}, {1, 2}, {2, 3}});
    if (n == 5) types.insert(types.end(), {{2, 3}, {1, 4}});
    for (const auto& type : types) {
      if (n == 5 && type == full_type(5)) continue;  // 9765 flags; the smaller types suffice
      const auto flags = all_flags(*f, n, type);
      std::size_t best = 0;
      for (const auto& g : flags) {
        best = std::max(best, flag_distance(flags.front(), g));
        for (std::size_t i = 0; i < 3 && i < flags.size(); ++i) ASSERT_EQ(flag_distance(flags[i], g), flag_distance(g, flags[i]));
      }
      EXPECT_EQ(best, max_flag_distance(type, n)) << "n=" << n;
    }
  }
  EXPECT_EQ(max_flag_distance(full_type(4), 4), 8u);
  EXPECT_EQ(max_flag_distance(full_type(6), 6), 18u);
  EXPECT_EQ(max_flag_distance(full_type(8), 8), 32u);
  EXPECT_THROW(max_flag_distance(std::vector<std::size_t>{2, 1}, 4), InvalidArgument);
  EXPECT_THROW(max_flag_distance(std::vector<std::size_t>{1, 4}, 4), InvalidArgument);
}

TEST(FlagDistance, TriangleInequalityOnRandomFlags) {
  const auto t = build_tower(3, 1, 2);
  Rng rng(77);
  std::vector<Flag> fl;
  for (int i = 0; i < 30; ++i) fl.push_back(complete_to_full_flag(random_subspace(rng, t.gf_q(), 2, 4)) * random_invertible(rng, t.gf_q(), 4));
  for (const auto& a : fl)
    for (const auto& b : fl)
      for (const auto& c : fl) ASSERT_LE(flag_distance(a, c), flag_distance(a, b) + flag_distance(b, c));
}

TEST(Completion, Examples) {
  auto f = GaloisField::prime(2);
  const Flag a = complete_to_full_flag(span(*f, {{0, 1, 0, 0}}));
  EXPECT_EQ(a[0], span(*f, {{0, 1, 0, 0}}));
  EXPECT_EQ(a[1], span(*f, {{0, 1, 0, 0}, {1, 0, 0, 0}}));
  EXPECT_EQ(a[2], span(*f, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}}));
  const Subspace u = span(*f, {{1, 1, 0, 0}, {0, 0, 1, 1}});
  const Flag b = complete_to_full_flag(u);
  EXPECT_TRUE(b.is_full());
  EXPECT_EQ(b[0], span(*f, {{1, 1, 0, 0}}));
  EXPECT_EQ(b[1], u);
  EXPECT_EQ(b[2], span(*f, {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 0, 0}}));
  const auto t = build_tower(3, 1, 2);
  EXPECT_EQ(complete_to_full_flag(U_k(t)), standard_full_flag(t.gf_q(), 4));
  EXPECT_THROW(complete_to_full_flag(Subspace::whole(*f, 4)), InvalidArgument);
}

TEST(FlagCode, SortsDedupesAndRejectsMixedTypes) {
  auto f = GaloisField::prime(2);
  const auto flags = all_flags(*f, 4, full_type(4));
  FlagCode c({flags[7], flags[3], flags[7]});
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.flags().front(), flags[3]);
  EXPECT_TRUE(c.contains(flags[7]));
  EXPECT_EQ(c.projected(1).dim(), 2u);
  const auto partial = all_flags(*f, 4, {1, 2});
  EXPECT_THROW(FlagCode({flags[0], partial[0]}), InvalidArgument);
  EXPECT_EQ(min_distance(FlagCode({flags[0]})), 0u);
}

// Exhaustive over all 315 full flags of F_2^4 under G (|G| = 60).
TEST(OrbitStatements, HoldForEveryFullFlagOverF2To4) {
  const auto t = build_tower(2, 1, 2);
  const auto flags = all_flags(t.gf_q(), 4, full_type(4));
  std::map<std::string, std::size_t> disjoint, orbital;
  for (const auto& [name, G] : {std::pair{std::string("G"), build_G(t)}, std::pair{std::string("H"), build_singer(t).H}}) {
    for (const auto& F : flags) {
      const auto a = stabilizer_flag_decomposition_check(G, F);
      ASSERT_TRUE(a.passed()) << a.violations.front();
      const auto b = disjoint_orbit_equivalence_check(G, F);
      ASSERT_TRUE(b.passed()) << b.violations.front();
      disjoint[name] += is_disjoint(orbit_flag_code(G, F));
      const auto c = orbital_odfc_check(G, F);
      if (c.passed())
        ++orbital[name];
      else
        ASSERT_EQ(c.violations.front().rfind("precondition", 0), 0u) << c.violations.front();
      ASSERT_TRUE(characterization_check(orbit_flag_code(G, F)).passed());
    }
  }
  // H has prime order and fixes no point, so every H-orbit is disjoint.
  EXPECT_EQ(disjoint["H"], flags.size());
  EXPECT_LT(disjoint["G"], flags.size());
  EXPECT_GT(orbital["H"], 0u);
}

TEST(OrbitStatements, ContainmentPreconditionIsReported) {
  const auto t = build_tower(2, 1, 2);
  const auto G = build_G(t);
  const Flag good = complete_to_full_flag(U_k(t));
  EXPECT_TRUE(stabilizer_containment_check(G, good).passed());
  // F_2 = rowsp(e1, e3) is not a spread element; its orbit is not a partial spread.
  const Flag bad = complete_to_full_flag(span(t.gf_q(), {{1, 0, 0, 0}, {0, 0, 1, 0}}));
  const auto r = stabilizer_containment_check(G, bad);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.violations.front().rfind("precondition", 0), 0u);
  EXPECT_THROW(middle_index(Flag({U_k(t)})), InvalidArgument);
}

class OdfcParams : public ::testing::TestWithParam<Params> {};

TEST_P(OdfcParams, ConstructionHasMaximumSizeAndDistance) {
  const auto [p, e, k] = GetParam();
  const auto t = build_tower(p, e, k);
  const auto c = build_odfc(t);
  EXPECT_EQ(c.size(), t.qk() + 1u);
  EXPECT_EQ(min_distance(c), 2u * k * k);
  EXPECT_EQ(min_distance(c), max_flag_distance(c));
  const auto routes = optimum_distance_routes(c);
  EXPECT_TRUE(routes.by_distance);
  EXPECT_TRUE(routes.by_characterization);
  EXPECT_TRUE(is_disjoint(c));
  EXPECT_EQ(c.projected(k - 1), build_segre_spread(t));
  EXPECT_TRUE(max_size_theorem_check(c).passed());
  for (const auto& f : c.flags()) ASSERT_TRUE(f.is_full());
}

INSTANTIATE_TEST_SUITE_P(Towers, OdfcParams, ::testing::Values(Params{2, 1, 2}, Params{3, 1, 2}, Params{2, 1, 3}, Params{2, 2, 2}, Params{5, 1, 2}),
                         [](const auto& info) {
                           return "p" + std::to_string(info.param[0]) + "e" + std::to_string(info.param[1]) + "k" +
                                  std::to_string(info.param[2]);
                         });

TEST(Odfc, KnownSizesAndDistances) {
  EXPECT_EQ(build_odfc(build_tower(2, 1, 2)).size(), 5u);
  EXPECT_EQ(min_distance(build_odfc(build_tower(2, 1, 2))), 8u);
  EXPECT_EQ(build_odfc(build_tower(3, 1, 2)).size(), 10u);
  EXPECT_EQ(min_distance(build_odfc(build_tower(3, 1, 2))), 8u);
  EXPECT_EQ(build_odfc(build_tower(2, 1, 3)).size(), 9u);
  EXPECT_EQ(min_distance(build_odfc(build_tower(2, 1, 3))), 18u);
}

TEST(Odfc, UnionOfTwoSingerOrbitsInOddCharacteristic) {
  const auto t = build_tower(3, 1, 2);
  const auto s = build_singer(t);
  const Flag fu = complete_to_full_flag(U_k(t)), fv = complete_to_full_flag(V_k(t));
  EXPECT_EQ(orbit_flag_code(s.H, fu).size(), 5u);
  EXPECT_EQ(orbit_flag_code(s.H, fv).size(), 5u);
  EXPECT_TRUE(union_theorem_check(s.H, {fu, fv}).passed());
  const auto dup = union_theorem_check(s.H, {fu, fu});
  ASSERT_FALSE(dup.passed());
  EXPECT_EQ(dup.violations.front().rfind("precondition", 0), 0u);
}

// Largest optimum distance full flag codes of F_2^4 by clique search over the 315 flags.
TEST(MaxSize, ExhaustiveOverF2To4) {
  auto f = GaloisField::prime(2);
  const auto flags = all_flags(*f, 4, full_type(4));
  const std::size_t N = flags.size();
  std::vector<std::vector<char>> adj(N, std::vector<char>(N, 0));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) adj[i][j] = adj[j][i] = flag_distance(flags[i], flags[j]) == 8;
  std::size_t best = 0, maximum_count = 0;
  bool all_spreads = true;
  std::vector<std::size_t> cur;
  std::function<void(const std::vector<std::size_t>&)> rec = [&](const std::vector<std::size_t>& cand) {
    if (cand.empty()) {
      if (cur.size() < best) return;
      std::vector<Flag> fl;
      for (auto i : cur) fl.push_back(flags[i]);
      if (cur.size() > best) {
        best = cur.size();
        maximum_count = 0;
        all_spreads = true;
      }
      ++maximum_count;
      all_spreads = all_spreads && is_spread(FlagCode(fl).projected(1));
      return;
    }
    if (cur.size() + cand.size() < best) return;
    for (std::size_t x = 0; x < cand.size(); ++x) {
      std::vector<std::size_t> next;
      for (std::size_t y = x + 1; y < cand.size(); ++y)
        if (adj[cand[x]][cand[y]]) next.push_back(cand[y]);
      cur.push_back(cand[x]);
      rec(next);
      cur.pop_back();
    }
  };
  // GL(4,2) is transitive on full flags and preserves distance, so cliques through flags[0] suffice.
  std::vector<std::size_t> all;
  for (std::size_t i = 1; i < N; ++i)
    if (adj[0][i]) all.push_back(i);
  cur.push_back(0);
  rec(all);
  EXPECT_EQ(best, 5u);  // q^k + 1
  EXPECT_TRUE(all_spreads);
  EXPECT_GT(maximum_count, 0u);
}

TEST(NonDisjointExample, Reproduced) {
  const auto t = build_tower(2, 1, 2);
  const auto r = reproduce_nondisjoint_example(t, build_G(t));
  EXPECT_TRUE(r.passed()) << (r.violations.empty() ? "" : r.violations.front());
  EXPECT_EQ(r.computed["orbit_size"], 15);
  const auto t3 = build_tower(3, 1, 2);
  EXPECT_FALSE(reproduce_nondisjoint_example(t3, build_G(t3)).passed());
}

TEST(SingleOrbit, CharacteristicTwoHasSingleOrbitCodes) {
  const auto t = build_tower(2, 1, 2);
  const auto r = search_single_orbit_odfc(t, build_Gbar(t));
  EXPECT_EQ(r.flag_stabilizer_order, 4u);
  EXPECT_GT(r.optimum_single_orbit, 0u);
  EXPECT_LE(r.optimum_single_orbit, r.transitive);
}
