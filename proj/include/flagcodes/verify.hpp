#pragma once

// Named check suites over one tower. Check names follow the statement labels
// they exercise; see README for the full list.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flagcodes/flag.hpp"
#include "flagcodes/flag_orbits.hpp"
#include "flagcodes/galois.hpp"
#include "flagcodes/group.hpp"
#include "flagcodes/io.hpp"
#include "flagcodes/linear_groups.hpp"
#include "flagcodes/random.hpp"
#include "flagcodes/report.hpp"
#include "flagcodes/spread.hpp"

namespace flagcodes {

struct VerificationReport {
  std::uint32_t p = 0, e = 0, k = 0, q = 0;
  std::vector<CheckReport> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed(); });
  }
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) arr.push_back(io::report_to_json(c));
    return {{"p", p}, {"e", e}, {"k", k}, {"q", q}, {"status", passed() ? "pass" : "fail"}, {"checks", arr}};
  }
};

/// Lazily built structures shared by the suites.
class VerifyContext {
 public:
  explicit VerifyContext(const FieldTower& t) : t_(t) {}
  const FieldTower& tower() const { return t_; }
  const MatrixGroup& G() { return G_ ? *G_ : *(G_ = build_G(t_)); }
  const MatrixGroup& Gbar() { return Gbar_ ? *Gbar_ : *(Gbar_ = build_Gbar(t_)); }
  const MatrixGroup& SL2() { return SL2_ ? *SL2_ : *(SL2_ = build_SL2(t_)); }
  const SingerData& singer() { return singer_ ? *singer_ : *(singer_ = build_singer(t_)); }
  const SubspaceCode& spread() { return spread_ ? *spread_ : *(spread_ = build_segre_spread(t_)); }
  bool odd() const { return t_.p() != 2; }

 private:
  const FieldTower& t_;
  std::optional<MatrixGroup> G_, Gbar_, SL2_;
  std::optional<SingerData> singer_;
  std::optional<SubspaceCode> spread_;
};

namespace suites {

inline void spread(VerifyContext& cx, std::vector<CheckReport>& out) {
  const FieldTower& t = cx.tower();
  const std::size_t k = t.k();
  out.push_back(timed_check("det_companion", [&](CheckReport& r) {
    const std::uint64_t e = (std::uint64_t(t.qk()) - 1) / (t.q() - 1);
    r.expect_eq<Code>(t.gf_qk().pow(t.alpha(), e), determinant(t.companion()), "det P");
  }));
  out.push_back(timed_check("eq_isoalphaP", [&](CheckReport& r) {
    const GaloisField& f = t.gf_qk();
    r.require(t.field_iso(t.alpha()) == t.companion(), "phi(alpha) != P");
    std::vector<Matrix> img;
    for (Code x = 0; x < f.size(); ++x) {
      img.push_back(t.field_iso(x));
      if (!(img.back() == t.field_iso_by_definition(x))) r.fail("cached phi differs at " + std::to_string(x));
    }
    auto sorted = img;
    std::sort(sorted.begin(), sorted.end());
    r.require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "phi is not injective");
    // exhaustive below 256 elements, otherwise a fixed pseudo-random sample of pairs
    std::size_t pairs = 0, bad = 0;
    auto test = [&](Code x, Code y) {
      ++pairs;
      if (!(img[f.add(x, y)] == img[x] + img[y]) || !(img[f.mul(x, y)] == img[x] * img[y])) ++bad;
    };
    if (f.size() <= 256) {
      for (Code x = 0; x < f.size(); ++x)
        for (Code y = 0; y < f.size(); ++y) test(x, y);
    } else {
      Rng rng(0x15a1fa);
      for (int i = 0; i < 20000; ++i) test(rng.element(f), rng.element(f));
    }
    r.require(bad == 0, std::to_string(bad) + " pairs break the ring homomorphism");
    r.expected = pairs;
    r.computed = pairs - bad;
  }));
  out.push_back(timed_check("def_spread_segre", [&](CheckReport& r) {
    const auto& s = cx.spread();
    r.expected = {{"size", t.qk() + 1}, {"min_distance", 2 * k}, {"is_spread", true}};
    r.computed = {{"size", s.size()}, {"min_distance", code_min_distance(s)}, {"is_spread", is_spread(s)}};
    r.require(r.expected == r.computed, "Segre spread has the wrong size, distance or spread property");
    r.require(s.contains(U_k(t)) && s.contains(V_k(t)), "spread misses U_k or V_k");
  }));
  out.push_back(timed_check("eq_fieldreduction", [&](CheckReport& r) {
    std::vector<Subspace> img;
    for (const auto& l : all_lines(t)) img.push_back(field_reduction(t, l));
    const SubspaceCode c(t.gf_q(), 2 * k, k, img);
    r.expect_eq(cx.spread().size(), c.size(), "image size");
    r.require(c == cx.spread(), "field reduction image differs from the Segre spread");
    r.require(field_reduction(t, make_line(t, 1, 0)) == U_k(t), "phi(rowsp(1,0)) != U_k");
    r.require(field_reduction(t, make_line(t, 0, 1)) == V_k(t), "phi(rowsp(0,1)) != V_k");
  }));
  out.push_back(timed_check("eq_spread_orbital", [&](CheckReport& r) {
    const auto orb = orbit_of(cx.G(), U_k(t));
    r.expect_eq(cx.spread().size(), orb.orbit.size(), "orbit size");
    r.require(orb.orbit == cx.spread().members(), "Orb_G(U_k) differs from the Segre spread");
  }));
  {
    const auto& gb = cx.Gbar();
    CheckReport r = gb.order() <= 50000 ? action_equivalence_check(t, gb.elements())
                                        : action_equivalence_check(t, 500, 0xacc10);
    out.push_back(std::move(r));
  }
}

inline void groups(VerifyContext& cx, std::vector<CheckReport>& out) {
  const FieldTower& t = cx.tower();
  const GaloisField& f = t.gf_qk();
  const std::uint64_t Q = t.qk();
  const std::uint64_t sl_order = Q * (Q * Q - 1);

  out.push_back(timed_check("prop_generadores_SL", [&](CheckReport& r) {
    const auto& sl = cx.SL2();
    r.expect_eq<std::uint64_t>(sl_order, sl.order(), "|SL(2,q^k)|");
    if (Q <= 32) {
      r.require(sl.elements() == matrices_with_det(f, 1), "generated group differs from the det-1 matrices");
    } else {
      for (const auto& m : sl.elements())
        if (determinant(m) != 1) {
          r.fail("element with determinant != 1");
          break;
        }
    }
  }));
  out.push_back(timed_check("prop_Estr_barG", [&](CheckReport& r) {
    const auto& gb = cx.Gbar();
    const auto& sl = cx.SL2();
    r.require(sl.is_subgroup_of(gb), "SL(2,q^k) is not inside Gbar");
    const Matrix s = swap_matrix(f, 1);
    const Matrix l = lower_unipotent(Matrix(f, {{t.alpha()}}));
    r.require(l == s * upper_unipotent(Matrix(f, {{t.alpha()}})) * s, "lower unipotent is not a swap conjugate");
    if (!cx.odd()) {
      r.expect_eq<std::uint64_t>(sl_order, gb.order(), "|Gbar|");
      r.require(gb == sl, "Gbar != SL(2,q^k) in characteristic 2");
      return;
    }
    r.expect_eq<std::uint64_t>(2 * sl_order, gb.order(), "|Gbar|");
    r.require(!sl.contains(s) && element_order(gb, s) == 2, "swap matrix should have order 2 outside SL");
    for (const auto& x : sl.generators())
      if (!sl.contains(s * x * s)) {
        r.fail("swap matrix does not normalize SL(2,q^k)");
        break;
      }
    std::vector<Matrix> cosets = sl.elements();
    for (const auto& x : sl.elements()) cosets.push_back(x * s);
    std::sort(cosets.begin(), cosets.end());
    r.require(cosets == gb.elements(), "Gbar != SL u SL.swap");
  }));
  out.push_back(timed_check("eq_hom_grasmanianas", [&](CheckReport& r) {
    const auto& gb = cx.Gbar();
    const auto& g = cx.G();
    std::vector<Matrix> img;
    img.reserve(gb.order());
    for (const auto& a : gb.elements()) img.push_back(psi(t, a));
    std::sort(img.begin(), img.end());
    r.require(std::adjacent_find(img.begin(), img.end()) == img.end(), "psi is not injective on Gbar");
    r.expect_eq(g.order(), gb.order(), "|G| vs |Gbar|");
    r.require(img == g.elements(), "psi(Gbar) != G");
    Rng rng(0x951);
    for (int i = 0; i < 200; ++i) {
      const Matrix& a = gb.elements()[rng.below(gb.order())];
      const Matrix& b = gb.elements()[rng.below(gb.order())];
      if (!(psi(t, a * b) == psi(t, a) * psi(t, b))) {
        r.fail("psi(AB) != psi(A) psi(B)");
        break;
      }
    }
    r.require(psi(t, swap_matrix(f, 1)) == swap_matrix(t.gf_q(), t.k()), "psi(swap) is not the block swap");
  }));
  const auto& s = cx.singer();
  out.push_back(timed_check("eq_def_barH", [&](CheckReport& r) {
    const std::uint64_t Q2 = t.q2k();
    r.expected = {{"order_M", Q2 - 1}, {"order_Hbar", Q + 1}, {"det_M", t.gf_q2k().pow(t.omega(), Q + 1)}};
    r.computed = {{"order_M", element_order(s.cycle, s.M)}, {"order_Hbar", s.Hbar.order()}, {"det_M", determinant(s.M)}};
    r.require(r.expected == r.computed, "Singer data mismatch");
    r.require(s.cycle.order() == Q2 - 1, "|<M>| != q^2k - 1");
    std::vector<Matrix> meet;
    for (const auto& m : s.cycle.elements())
      if (determinant(m) == 1) meet.push_back(m);
    r.require(meet == s.Hbar.elements(), "<M> n SL(2,q^k) != <M^(q^k-1)>");
    r.require(s.Hbar.is_subgroup_of(cx.SL2()), "Hbar not inside SL(2,q^k)");
    r.require(s.H.is_subgroup_of(cx.G()), "H not inside G");
  }));
  for (auto& c : singer_stabilizer_checks(t, s)) out.push_back(std::move(c));

  const auto lines = all_lines(t);
  out.push_back(timed_check("prop_AccioHbarra", [&](CheckReport& r) {
    const auto parts = partition_into_orbits(s.Hbar, lines);
    std::vector<std::size_t> sizes;
    for (const auto& o : parts) sizes.push_back(o.orbit.size());
    const std::vector<std::size_t> want =
        cx.odd() ? std::vector<std::size_t>{(Q + 1) / 2, (Q + 1) / 2} : std::vector<std::size_t>{Q + 1};
    r.expect_eq(want, sizes, "orbit sizes");
    if (!cx.odd()) r.require(parts[0].stabilizer.order() == 1, "action is not regular");
  }));
  if (cx.odd())
    out.push_back(timed_check("prop_eximpar", [&](CheckReport& r) {
      const auto o1 = orbit_points(s.Hbar, make_line(t, 1, 0));
      const auto o2 = orbit_points(s.Hbar, make_line(t, 0, 1));
      std::vector<Subspace> both = o1;
      both.insert(both.end(), o2.begin(), o2.end());
      std::sort(both.begin(), both.end());
      r.require(!std::binary_search(o1.begin(), o1.end(), make_line(t, 0, 1)), "rowsp(0,1) lies in the orbit of rowsp(1,0)");
      r.expect_eq(lines.size(), o1.size() + o2.size(), "orbit sizes sum");
      r.require(both == lines, "the two orbits do not partition the lines");
    }));
  out.push_back(timed_check("lem_stabH", [&](CheckReport& r) {
    std::vector<Matrix> want{Matrix::identity(t.gf_q(), 2 * t.k())};
    if (cx.odd()) want.push_back(Matrix::scalar(t.gf_q(), 2 * t.k(), t.gf_q().neg(1)));
    std::sort(want.begin(), want.end());
    std::size_t ok = 0;
    for (const auto& L : cx.spread().members()) ok += stabilizer(s.H, L).elements() == want;
    r.expect_eq(cx.spread().size(), ok, "spread members with stabilizer {I} or {I,-I}");
  }));
  out.push_back(timed_check("thm_accioHsobreS", [&](CheckReport& r) {
    const auto parts = partition_into_orbits(s.H, cx.spread().members());
    std::vector<std::size_t> sizes;
    for (const auto& o : parts) sizes.push_back(o.orbit.size());
    const std::vector<std::size_t> want =
        cx.odd() ? std::vector<std::size_t>{(Q + 1) / 2, (Q + 1) / 2} : std::vector<std::size_t>{Q + 1};
    r.expect_eq(want, sizes, "orbit sizes on S");
  }));
  if (cx.odd())
    out.push_back(timed_check("prop_S_impar", [&](CheckReport& r) {
      auto a = orbit_points(s.H, U_k(t));
      const auto b = orbit_points(s.H, V_k(t));
      r.require(!std::binary_search(a.begin(), a.end(), V_k(t)), "U_k and V_k share an H-orbit");
      a.insert(a.end(), b.begin(), b.end());
      std::sort(a.begin(), a.end());
      r.expect_eq(cx.spread().size(), a.size(), "|Orb_H(U_k)| + |Orb_H(V_k)|");
      r.require(a == cx.spread().members(), "S != Orb_H(U_k) u Orb_H(V_k)");
    }));
}

inline void flags(VerifyContext& cx, std::vector<CheckReport>& out) {
  const FieldTower& t = cx.tower();
  const std::size_t k = t.k(), n = 2 * k;
  const std::uint64_t Q = t.qk();
  const auto& s = cx.singer();
  const Flag std_flag = standard_full_flag(t.gf_q(), n);
  const Flag fu = complete_to_full_flag(U_k(t));
  const Flag fv = complete_to_full_flag(V_k(t));

  auto merged = [](std::string name, std::vector<CheckReport> parts) {
    return timed_check(std::move(name), [&](CheckReport& r) {
      nlohmann::json comp = nlohmann::json::array();
      for (const auto& p : parts) {
        r.absorb(p);
        comp.push_back({{"expected", p.expected}, {"computed", p.computed}});
      }
      r.computed = comp;
    });
  };
  out.push_back(merged("lemma_estabilizador_flag", {stabilizer_flag_decomposition_check(cx.G(), std_flag),
                                                    stabilizer_flag_decomposition_check(s.H, std_flag),
                                                    stabilizer_flag_decomposition_check(s.H, fv)}));
  out.push_back(merged("prop_disjorb", {disjoint_orbit_equivalence_check(cx.G(), std_flag),
                                        disjoint_orbit_equivalence_check(s.H, fu),
                                        disjoint_orbit_equivalence_check(s.H, fv)}));
  out.push_back(merged("prop_contenido", {stabilizer_containment_check(cx.G(), std_flag),
                                          stabilizer_containment_check(s.H, fu), stabilizer_containment_check(s.H, fv)}));
  out.push_back(merged("teo_ODFCorbital", {orbital_odfc_check(s.H, fu), orbital_odfc_check(s.H, fv)}));
  out.push_back(timed_check("cor_size_ODFC", [&](CheckReport& r) {
    const FlagCode c = orbit_flag_code(s.H, fu);
    const std::size_t want = cx.odd() ? (Q + 1) / 2 : Q + 1;
    r.expected = {{"size", want}, {"optimum", true}};
    r.computed = {{"size", c.size()}, {"optimum", is_optimum_distance(c)}};
    r.require(r.expected == r.computed, "Orb_H(F) has the wrong size or is not optimum");
  }));
  {
    std::vector<Flag> fl{fu};
    if (cx.odd()) fl.push_back(fv);
    out.push_back(union_theorem_check(s.H, fl));
  }
  const FlagCode odfc = build_odfc(t, s);
  if (cx.odd())
    out.push_back(timed_check("prop_largest_size_impar", [&](CheckReport& r) {
      r.expected = {{"size", Q + 1}, {"optimum", true}};
      r.computed = {{"size", odfc.size()}, {"optimum", is_optimum_distance(odfc)}};
      r.require(r.expected == r.computed, "two-orbit code is not optimum of size q^k + 1");
    }));
  out.push_back(timed_check("odfc_construction", [&](CheckReport& r) {
    const std::size_t bound = 2 * k * k;
    std::size_t off = 0;
    const auto& fl = odfc.flags();
    for (std::size_t i = 0; i < fl.size(); ++i)
      for (std::size_t j = i + 1; j < fl.size(); ++j) off += flag_distance(fl[i], fl[j]) != bound;
    r.expected = {{"size", Q + 1}, {"min_distance", bound}, {"disjoint", true}, {"optimum", true}};
    r.computed = {{"size", odfc.size()}, {"min_distance", min_distance(odfc)}, {"disjoint", is_disjoint(odfc)},
                  {"optimum", is_optimum_distance(odfc)}};
    r.require(r.expected == r.computed, "constructed code misses size, distance or optimality");
    r.require(off == 0, std::to_string(off) + " pairs are not at distance exactly 2k^2");
    r.require(odfc.projected(k - 1) == cx.spread(), "k-projected code is not the Segre spread");
  }));
  out.push_back(merged("teo_carac_odfc", {characterization_check(odfc), characterization_check(orbit_flag_code(cx.G(), std_flag)),
                                          characterization_check(orbit_flag_code(s.H, fu)),
                                          characterization_check(orbit_flag_code(s.H, std_flag))}));
  out.push_back(max_size_theorem_check(odfc));
  if (t.q() == 2 && k == 2 && t.gf_qk().polynomial() == poly::Poly{1, 1, 1})
    out.push_back(reproduce_nondisjoint_example(t, cx.G()));
}

inline void slow(VerifyContext& cx, std::vector<CheckReport>& out) {
  const FieldTower& t = cx.tower();
  const std::size_t Q = t.qk();
  out.push_back(timed_check("rem_impar_no_regular", [&](CheckReport& r) {
    const auto found = search_transitive_subgroups(cx.Gbar(), Q + 1, all_lines(t));
    r.computed = {{"transitive_subgroups", found.size()}};
    if (cx.odd()) {
      r.expected = {{"transitive_subgroups", 0}};
      r.require(found.empty(), "found a transitive subgroup of order q^k + 1");
    } else {
      const bool has = std::find(found.begin(), found.end(), cx.singer().Hbar) != found.end();
      r.expected = {{"contains_Hbar", true}};
      r.computed["contains_Hbar"] = has;
      r.require(has, "Hbar missing from the transitive subgroups");
    }
  }));
  out.push_back(timed_check("rem_no_single_orbit", [&](CheckReport& r) {
    const auto res = search_single_orbit_odfc(t, cx.Gbar());
    r.computed = {{"subgroups_examined", res.subgroups_examined},
                  {"transitive", res.transitive},
                  {"optimum_single_orbit", res.optimum_single_orbit},
                  {"flag_stabilizer_order", res.flag_stabilizer_order}};
    if (cx.odd()) {
      r.expected = {{"optimum_single_orbit", 0}};
      r.require(res.optimum_single_orbit == 0, "a subgroup gives a single-orbit optimum distance code");
    } else {
      r.expected = {{"optimum_single_orbit", ">= 1"}};
      r.require(res.optimum_single_orbit >= 1, "no single-orbit optimum code although H should give one");
    }
  }));
}

}  // namespace suites

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "spread", "groups", "flags", "slow"};
  return names;
}

/// Runs one suite ("all" = spread + groups + flags). CapExceeded propagates.
inline VerificationReport verify(const FieldTower& t, const std::string& suite) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw InvalidArgument("unknown suite '" + suite + "'");
  VerificationReport rep{t.p(), t.e(), t.k(), t.q(), {}};
  VerifyContext cx(t);
  if (suite == "spread" || suite == "all") suites::spread(cx, rep.checks);
  if (suite == "groups" || suite == "all") suites::groups(cx, rep.checks);
  if (suite == "flags" || suite == "all") suites::flags(cx, rep.checks);
  if (suite == "slow") suites::slow(cx, rep.checks);
  return rep;
}

}  // namespace flagcodes
