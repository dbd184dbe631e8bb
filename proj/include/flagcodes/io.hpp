#pragma once

// JSON forms of towers, matrices, subspaces, codes, groups and flags. Field
// entries are canonical integer codes.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flagcodes/channel.hpp"
#include "flagcodes/errors.hpp"
#include "flagcodes/flag.hpp"
#include "flagcodes/galois.hpp"
#include "flagcodes/group.hpp"
#include "flagcodes/report.hpp"
#include "flagcodes/subspace.hpp"

namespace flagcodes::io {

using nlohmann::json;

inline json tower_to_json(const FieldTower& t) {
  return {{"p", t.p()}, {"e", t.e()}, {"k", t.k()}, {"polys", t.polys()}};
}

inline FieldTower tower_from_json(const json& j) {
  try {
    TowerOverrides ov;
    if (j.contains("polys")) {
      const auto& polys = j.at("polys");
      if (!polys.is_array() || polys.size() != 3) throw InvalidArgument("tower polys must list three polynomials");
      for (std::size_t i = 0; i < 3; ++i) ov.polys[i] = polys[i].get<poly::Poly>();
    }
    return build_tower(j.at("p").get<std::uint32_t>(), j.at("e").get<std::uint32_t>(), j.at("k").get<std::uint32_t>(), ov);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed tower JSON: ") + e.what());
  }
}

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(std::vector<Code>(m.row(i).begin(), m.row(i).end()));
  return rows;
}

inline Matrix matrix_from_json(const json& rows, const GaloisField& f, std::size_t cols) {
  if (!rows.is_array()) throw InvalidArgument("matrix JSON must be an array of rows");
  std::vector<Code> data;
  for (const auto& r : rows) {
    if (!r.is_array() || r.size() != cols) throw InvalidArgument("matrix row has the wrong length");
    for (const auto& c : r) data.push_back(c.get<Code>());
  }
  return Matrix(f, rows.size(), cols, std::move(data));
}

inline json subspace_to_json(const Subspace& s) {
  return {{"n", s.ambient()}, {"k", s.dim()}, {"rows", matrix_to_json(s.basis())}};
}

inline Subspace subspace_from_json(const json& j, const GaloisField& f) {
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    Subspace s = Subspace::from(matrix_from_json(j.at("rows"), f, n));
    if (s.dim() != j.at("k").get<std::size_t>()) throw InvalidArgument("subspace rows do not span a k-dimensional space");
    return s;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed subspace JSON: ") + e.what());
  }
}

inline json code_to_json(const SubspaceCode& c) {
  json members = json::array();
  for (const auto& s : c.members()) members.push_back(subspace_to_json(s));
  return {{"q", c.field().size()}, {"n", c.ambient()}, {"k", c.dim()}, {"size", c.size()}, {"members", members}};
}

inline SubspaceCode code_from_json(const json& j, const GaloisField& f) {
  try {
    if (j.at("q").get<std::uint32_t>() != f.size()) throw InvalidArgument("code JSON is over a different field");
    std::vector<Subspace> m;
    for (const auto& s : j.at("members")) m.push_back(subspace_from_json(s, f));
    return SubspaceCode(f, j.at("n").get<std::size_t>(), j.at("k").get<std::size_t>(), std::move(m));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed code JSON: ") + e.what());
  }
}

/// Segre spread export: code plus construction tag and tower descriptor.
inline json spread_to_json(const FieldTower& t, const SubspaceCode& c) {
  json j = code_to_json(c);
  j["construction"] = "segre";
  j["tower"] = tower_to_json(t);
  return j;
}

inline json group_to_json(const MatrixGroup& g, bool dump_elements) {
  json gens = json::array();
  for (const auto& m : g.generators()) gens.push_back(matrix_to_json(m));
  json j = {{"q", g.field().size()}, {"n", g.degree()}, {"order", g.order()}, {"generators", gens}};
  if (dump_elements) {
    json el = json::array();
    for (const auto& m : g.elements()) el.push_back(matrix_to_json(m));
    j["elements"] = el;
  }
  return j;
}

inline json flag_to_json(const Flag& f) {
  json subs = json::array();
  for (const auto& s : f.subspaces()) subs.push_back(subspace_to_json(s));
  return {{"n", f.ambient()}, {"type", f.type()}, {"subspaces", subs}};
}

inline Flag flag_from_json(const json& j, const GaloisField& f) {
  try {
    std::vector<Subspace> subs;
    for (const auto& s : j.at("subspaces")) subs.push_back(subspace_from_json(s, f));
    Flag fl(std::move(subs));
    if (fl.ambient() != j.at("n").get<std::size_t>() || fl.type() != j.at("type").get<std::vector<std::size_t>>())
      throw InvalidArgument("flag header disagrees with its subspaces");
    return fl;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed flag JSON: ") + e.what());
  }
}

inline json flag_code_to_json(const FlagCode& c) {
  json flags = json::array();
  for (const auto& f : c.flags()) flags.push_back(flag_to_json(f));
  return {{"q", c.field().size()},     {"n", c.ambient()},
          {"type", c.type()},          {"size", c.size()},
          {"min_distance", min_distance(c)}, {"optimum", is_optimum_distance(c)},
          {"flags", flags}};
}

/// Rejects files whose recorded min_distance differs from a recomputation.
inline FlagCode flag_code_from_json(const json& j, const GaloisField& f) {
  try {
    if (j.at("q").get<std::uint32_t>() != f.size()) throw InvalidArgument("flag code JSON is over a different field");
    std::vector<Flag> flags;
    for (const auto& x : j.at("flags")) flags.push_back(flag_from_json(x, f));
    FlagCode c(std::move(flags));
    if (c.ambient() != j.at("n").get<std::size_t>() || c.type() != j.at("type").get<std::vector<std::size_t>>())
      throw InvalidArgument("flag code header disagrees with its flags");
    if (j.at("min_distance").get<std::size_t>() != min_distance(c))
      throw InvalidArgument("flag code min_distance does not match its flags");
    return c;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed flag code JSON: ") + e.what());
  }
}

inline json report_to_json(const CheckReport& r) {
  json j = {{"name", r.name},         {"status", r.passed() ? "pass" : "fail"}, {"expected", r.expected},
            {"computed", r.computed}, {"elapsed_ms", r.elapsed_ms}};
  if (!r.violations.empty()) j["violations"] = r.violations;
  return j;
}

inline json trial_to_json(const TrialRecord& r) {
  return {{"trial", r.trial},     {"seed", r.seed},       {"sent", r.sent},
          {"decoded", r.decoded}, {"success", r.success}, {"distance", r.distance}};
}

inline json summary_to_json(const SimulationSummary& s) {
  return {{"summary", true}, {"trials", s.trials}, {"successes", s.successes}, {"success_rate", s.rate()}};
}

}  // namespace flagcodes::io
