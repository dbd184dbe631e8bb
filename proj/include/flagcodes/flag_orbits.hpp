#pragma once

// Orbit flag codes and the executable forms of the orbit statements: flag
// stabilizer decomposition, disjointness, stabilizer containment, the orbital
// and union constructions, and the final optimum distance full flag codes.

#include <algorithm>
#include <string>
#include <vector>

#include "flagcodes/flag.hpp"
#include "flagcodes/galois.hpp"
#include "flagcodes/group.hpp"
#include "flagcodes/linear_groups.hpp"
#include "flagcodes/report.hpp"
#include "flagcodes/spread.hpp"
#include "flagcodes/subspace.hpp"

namespace flagcodes {

inline FlagCode orbit_flag_code(const MatrixGroup& g, const Flag& f) {
  if (f.ambient() != g.degree()) throw InvalidArgument("flag and group have different ambient sizes");
  return FlagCode(orbit_points(g, f));
}

/// Stab(F) = intersection of the Stab(F_i).
inline CheckReport stabilizer_flag_decomposition_check(const MatrixGroup& g, const Flag& f) {
  return timed_check("lemma_estabilizador_flag", [&](CheckReport& r) {
    std::vector<Matrix> meet = g.elements();
    for (const auto& s : f.subspaces()) {
      const auto st = stabilizer(g, s).elements();
      std::vector<Matrix> next;
      std::set_intersection(meet.begin(), meet.end(), st.begin(), st.end(), std::back_inserter(next));
      meet = std::move(next);
    }
    const auto sf = stabilizer(g, f);
    r.expect_eq(meet.size(), sf.order(), "stabilizer order");
    r.require(meet == sf.elements(), "Stab(F) differs from the intersection of subspace stabilizers");
  });
}

/// Orb(F) disjoint <=> Stab(F) = Stab(F_1) = ... <=> Stab(F_1) = ... = Stab(F_r).
inline CheckReport disjoint_orbit_equivalence_check(const MatrixGroup& g, const Flag& f) {
  return timed_check("prop_disjorb", [&](CheckReport& r) {
    const bool a = is_disjoint(orbit_flag_code(g, f));
    const auto sf = stabilizer(g, f);
    std::vector<MatrixGroup> st;
    for (const auto& s : f.subspaces()) st.push_back(stabilizer(g, s));
    bool c = true, b = true;
    for (const auto& s : st) {
      c = c && s == st[0];
      b = b && s == sf;
    }
    r.expected = {{"disjoint", a}};
    r.computed = {{"all_equal_flag_stabilizer", b}, {"all_subspace_stabilizers_equal", c}};
    r.require(a == b && b == c, "disjointness and stabilizer conditions disagree");
  });
}

/// Position of the n/2-dimensional subspace of a full flag on F^{2k}.
inline std::size_t middle_index(const Flag& f) {
  if (!f.is_full() || f.ambient() % 2 != 0) throw InvalidArgument("expected a full flag on an even-dimensional space");
  return f.ambient() / 2 - 1;
}

/// Orb(F_k) has maximum distance (precondition), hence Stab(F_i) <= Stab(F_k) for all i.
inline CheckReport stabilizer_containment_check(const MatrixGroup& g, const Flag& f) {
  return timed_check("prop_contenido", [&](CheckReport& r) {
    const std::size_t m = middle_index(f), k = m + 1;
    const auto ok = orbit_of(g, f[m]);
    const SubspaceCode orb(f.field(), f.ambient(), k, ok.orbit);
    if (orb.size() > 1 && code_min_distance(orb) != 2 * k) {
      r.fail("precondition: Orb(F_k) does not have maximum distance");
      return;
    }
    std::size_t held = 0;
    for (std::size_t i = 0; i < f.length(); ++i) {
      if (stabilizer(g, f[i]).is_subgroup_of(ok.stabilizer))
        ++held;
      else
        r.fail("Stab(F_" + std::to_string(i + 1) + ") is not inside Stab(F_k)");
    }
    r.expected = f.length();
    r.computed = held;
  });
}

/// Hypotheses: Orb(F_k) has maximum distance and Stab(F_k) <= Stab(F_i) for
/// all i. Conclusion: Orb(F) is optimum distance with |Orb(F)| = |Orb(F_k)|.
inline CheckReport orbital_odfc_check(const MatrixGroup& g, const Flag& f) {
  return timed_check("teo_ODFCorbital", [&](CheckReport& r) {
    const std::size_t m = middle_index(f), k = m + 1;
    const auto ok = orbit_of(g, f[m]);
    const SubspaceCode orb(f.field(), f.ambient(), k, ok.orbit);
    if (orb.size() > 1 && code_min_distance(orb) != 2 * k) r.fail("precondition: Orb(F_k) does not have maximum distance");
    for (std::size_t i = 0; i < f.length(); ++i)
      if (!ok.stabilizer.is_subgroup_of(stabilizer(g, f[i])))
        r.fail("precondition: Stab(F_k) is not inside Stab(F_" + std::to_string(i + 1) + ")");
    if (!r.passed()) return;
    const FlagCode c = orbit_flag_code(g, f);
    r.expected = {{"size", orb.size()}, {"optimum", true}};
    r.computed = {{"size", c.size()}, {"optimum", is_optimum_distance(c)}};
    r.require(r.expected == r.computed, "orbit flag code is not an optimum distance code of the predicted size");
  });
}

/// Union of orbits of flags whose k-th subspaces lie in distinct orbits with a
/// maximum-distance union is optimum distance of size sum |Orb(F^j_k)|.
inline CheckReport union_theorem_check(const MatrixGroup& g, const std::vector<Flag>& flags) {
  return timed_check("cor_union_ODFC", [&](CheckReport& r) {
    if (flags.empty()) {
      r.fail("precondition: no flags");
      return;
    }
    const std::size_t m = middle_index(flags[0]), k = m + 1, n = flags[0].ambient();
    std::vector<Subspace> union_k;
    std::size_t expected_size = 0;
    std::vector<Flag> all;
    for (std::size_t j = 0; j < flags.size(); ++j) {
      const Flag& f = flags[j];
      if (f.ambient() != n || !f.is_full()) throw InvalidArgument("union theorem needs full flags of one ambient");
      const auto ok = orbit_of(g, f[m]);
      for (const auto& s : ok.orbit)
        if (std::binary_search(union_k.begin(), union_k.end(), s)) {
          r.fail("precondition: k-th subspaces of flags share an orbit");
          break;
        }
      union_k.insert(union_k.end(), ok.orbit.begin(), ok.orbit.end());
      std::sort(union_k.begin(), union_k.end());
      expected_size += ok.orbit.size();
      for (std::size_t i = 0; i < f.length(); ++i)
        if (!ok.stabilizer.is_subgroup_of(stabilizer(g, f[i])))
          r.fail("precondition: flag #" + std::to_string(j) + " has Stab(F_k) not inside Stab(F_" + std::to_string(i + 1) + ")");
      const auto orb = orbit_points(g, f);
      all.insert(all.end(), orb.begin(), orb.end());
    }
    const SubspaceCode uk(flags[0].field(), n, k, union_k);
    if (uk.size() > 1 && code_min_distance(uk) != 2 * k) r.fail("precondition: union of k-th orbits lacks maximum distance");
    if (!r.passed()) return;
    const FlagCode c(std::move(all));
    r.expected = {{"size", expected_size}, {"optimum", true}};
    r.computed = {{"size", c.size()}, {"optimum", is_optimum_distance(c)}};
    r.require(r.expected == r.computed, "union is not an optimum distance code of the predicted size");
  });
}

/// Routes (a) and (b) of the optimum-distance test agree on `c`.
inline CheckReport characterization_check(const FlagCode& c) {
  return timed_check("teo_carac_odfc", [&](CheckReport& r) {
    const auto routes = optimum_distance_routes(c);
    r.expected = routes.by_distance;
    r.computed = routes.by_characterization;
    r.require(routes.by_distance == routes.by_characterization, "optimum-distance routes disagree");
  });
}

/// An optimum distance full flag code on F_q^{2k} has at most q^k + 1
/// flags, and at q^k + 1 its k-projected code is a spread.
inline CheckReport max_size_theorem_check(const FlagCode& c) {
  return timed_check("teo_odfc_maxsize", [&](CheckReport& r) {
    const std::size_t n = c.ambient();
    if (n % 2 != 0 || c.type() != full_type(n)) throw InvalidArgument("max-size theorem concerns full flags on F^{2k}");
    const std::size_t k = n / 2;
    const std::uint64_t bound = checked_pow(c.field().size(), unsigned(k)) + 1;
    const bool opt = is_optimum_distance(c);
    r.expected = {{"max_size", bound}};
    r.computed = {{"optimum", opt}, {"size", c.size()}};
    if (!opt) return;
    r.require(c.size() <= bound, "optimum distance full flag code exceeds q^k + 1 flags");
    if (c.size() == bound) r.require(is_spread(c.projected(k - 1)), "maximum-size code has a non-spread k-projected code");
  });
}

/// Char 2: Orb_H(complete(U_k)). Odd char: Orb_H(complete(U_k)) u Orb_H(complete(V_k)).
inline FlagCode build_odfc(const FieldTower& t, const SingerData& s) {
  std::vector<Flag> flags = orbit_points(s.H, complete_to_full_flag(U_k(t)));
  if (t.p() != 2) {
    auto more = orbit_points(s.H, complete_to_full_flag(V_k(t)));
    flags.insert(flags.end(), more.begin(), more.end());
  }
  return FlagCode(std::move(flags));
}

inline FlagCode build_odfc(const FieldTower& t) { return build_odfc(t, build_singer(t)); }

/// The q=2, k=2 example: A = S T(P^2) S T(P) S T(P^2) = diag(P, P^2) fixes F_2,
/// moves F_1 to rowsp(0 1 0 0), and Orb_G(F) is not disjoint.
inline CheckReport reproduce_nondisjoint_example(const FieldTower& t, const MatrixGroup& G) {
  return timed_check("ex_nodisjoint", [&](CheckReport& r) {
    if (t.q() != 2 || t.k() != 2 || t.gf_qk().polynomial() != poly::Poly{1, 1, 1}) {
      r.fail("precondition: needs q=2, k=2 with p(x) = x^2 + x + 1");
      return;
    }
    const GaloisField& f = t.gf_q();
    const Matrix& P = t.companion();
    const Matrix P2 = P * P;
    const Matrix S = swap_matrix(f, 2);
    const Matrix A = S * upper_unipotent(P2) * S * upper_unipotent(P) * S * upper_unipotent(P2);
    Matrix diag(f, 4, 4);
    diag.set_block(0, 0, P);
    diag.set_block(2, 2, P2);
    r.require(A == diag, "A is not blockdiag(P, P^2)");
    r.require(G.contains(A), "A is not in G");
    const Flag F = standard_full_flag(f, 4);
    const Subspace target = Subspace::from(Matrix(f, {{0, 1, 0, 0}}));
    r.require(F[0] * A == target, "F_1 A is not rowsp(0 1 0 0)");
    r.require(F[0] * A != F[0], "A fixes F_1");
    r.require(F[1] * A == F[1], "A does not fix F_2");
    r.require(Subspace::from(Matrix(f, {{0, 1, 0, 0}, {1, 1, 0, 0}})) == F[1], "rowsp((0 1 0 0),(1 1 0 0)) is not F_2");
    r.require(SubspaceCode(f, 4, 2, orbit_points(G, F[1])) == build_segre_spread(t), "Orb_G(F_2) is not the spread");
    const FlagCode c = orbit_flag_code(G, F);
    bool proj_max = true;
    for (std::size_t i = 0; i < 3; ++i)
      proj_max = proj_max && code_min_distance(c.projected(i)) == max_subspace_distance(i + 1, 4);
    const bool disjoint = is_disjoint(c), optimum = is_optimum_distance(c);
    r.require(proj_max, "some projected code of Orb_G(F) lacks maximum distance");
    r.require(!disjoint, "Orb_G(F) is disjoint");
    r.require(!optimum, "Orb_G(F) is optimum distance");
    r.expected = {{"F1A", "rowsp(0 1 0 0)"}, {"disjoint", false}, {"optimum", false}};
    r.computed = {{"F1A", F[0] * A == target ? "rowsp(0 1 0 0)" : "other"}, {"disjoint", disjoint}, {"optimum", optimum},
                  {"orbit_size", c.size()}};
  });
}

struct SingleOrbitSearchResult {
  std::size_t subgroups_examined = 0;    // subgroups N with Stab_N(U_k) <= Stab(F)
  std::size_t transitive = 0;            // of those, transitive on the spread
  std::size_t optimum_single_orbit = 0;  // of those, Orb_N(F) is optimum distance
  std::size_t flag_stabilizer_order = 0;
};

/// Searches subgroups N <= G with Orb_N(U_k) = S for which Orb_N(F) is an
/// optimum distance code (F the standard full flag). Such N must satisfy
/// Stab_N(U_k) <= Stab_G(F), a condition inherited by subgroups, so the
/// lattice search over psi's preimage is exhaustive.
inline SingleOrbitSearchResult search_single_orbit_odfc(const FieldTower& t, const MatrixGroup& Gbar) {
  CayleyTable table(Gbar);
  const Subspace U = U_k(t);
  const Flag F = complete_to_full_flag(U);
  const auto spread = build_segre_spread(t);
  std::vector<char> fixU(table.size()), fixF(table.size());
  std::vector<std::uint32_t> uimg(table.size());
  std::vector<Matrix> images;
  std::vector<std::uint32_t> cand;
  SingleOrbitSearchResult res;
  for (std::uint32_t i = 0; i < table.size(); ++i) {
    images.push_back(psi(t, Gbar.elements()[i]));
    const Subspace ui = U * images.back();
    fixU[i] = ui == U;
    fixF[i] = fixU[i] && F * images.back() == F;
    const auto& m = spread.members();
    uimg[i] = std::uint32_t(std::lower_bound(m.begin(), m.end(), ui) - m.begin());
    if (fixF[i]) ++res.flag_stabilizer_order;
    if (!fixU[i] || fixF[i]) cand.push_back(i);
  }
  const std::size_t max_order = spread.size() * res.flag_stabilizer_order;
  auto keep = [&](const IndexSubgroup& s) {
    for (auto x : s.elements)
      if (fixU[x] && !fixF[x]) return false;
    return true;
  };
  const auto subs = enumerate_subgroups(table, cand, keep, max_order);
  res.subgroups_examined = subs.size();
  for (const auto& s : subs) {
    std::vector<std::uint32_t> orb;
    for (auto x : s.elements) orb.push_back(uimg[x]);
    std::sort(orb.begin(), orb.end());
    orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
    if (orb.size() != spread.size()) continue;
    ++res.transitive;
    std::vector<Flag> flags;
    for (auto x : s.elements) flags.push_back(F * images[x]);
    if (is_optimum_distance(FlagCode(std::move(flags)))) ++res.optimum_single_orbit;
  }
  return res;
}

}  // namespace flagcodes
