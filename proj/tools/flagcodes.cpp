// flagcodes: construct, verify and simulate optimum-distance full flag codes.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource cap.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "flagcodes/flagcodes.hpp"

namespace fc = flagcodes;
using nlohmann::json;

namespace {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCap = 3 };

struct TowerArgs {
  std::uint32_t p = 2, e = 1, k = 2;
  std::vector<std::string> polys;
};

void add_tower_options(CLI::App* cmd, TowerArgs& a) {
  cmd->add_option("--p", a.p, "characteristic (prime)")->required();
  cmd->add_option("--e", a.e, "q = p^e")->default_val(1);
  cmd->add_option("--k", a.k, "half the ambient dimension")->required();
  cmd->add_option("--poly", a.polys,
                  "primitive polynomial as coefficients low to high, e.g. 1,1,1; "
                  "prefix with 'LEVEL:' (1 = GF(q), 2 = GF(q^k), 3 = GF(q^2k)) to pick the level");
}

std::vector<fc::Code> parse_csv(const std::string& s) {
  std::vector<fc::Code> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw fc::InvalidArgument("bad coefficient '" + tok + "' in --poly " + s);
    out.push_back(fc::Code(v));
  }
  if (out.empty()) throw fc::InvalidArgument("empty --poly");
  return out;
}

// Unprefixed polynomials fill the levels in order, starting at GF(q) when
// e > 1 and at GF(q^k) otherwise (GF(p) needs no polynomial of degree 1).
fc::FieldTower make_tower(const TowerArgs& a) {
  fc::TowerOverrides ov;
  std::size_t next = a.e > 1 ? 0 : 1;
  for (const auto& spec : a.polys) {
    std::size_t level;
    std::string body = spec;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
      const std::string lv = spec.substr(0, colon);
      if (lv != "1" && lv != "2" && lv != "3") throw fc::InvalidArgument("--poly level must be 1, 2 or 3");
      level = std::size_t(lv[0] - '1');
      body = spec.substr(colon + 1);
    } else {
      level = next;
    }
    if (level > 2) throw fc::InvalidArgument("too many --poly values");
    if (ov.polys[level]) throw fc::InvalidArgument("--poly given twice for level " + std::to_string(level + 1));
    ov.polys[level] = parse_csv(body);
    next = level + 1;
  }
  return fc::build_tower(a.p, a.e, a.k, ov);
}

void write_json(const json& j, const std::string& out) {
  if (out == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw fc::InvalidArgument("cannot open " + out + " for writing");
  f << j.dump(2) << '\n';
}

int cmd_construct(const TowerArgs& a, const std::string& what, const std::string& out, bool dump) {
  const auto t = make_tower(a);
  json j;
  if (what == "spread") {
    j = fc::io::spread_to_json(t, fc::build_segre_spread(t));
  } else if (what == "group-G") {
    j = fc::io::group_to_json(fc::build_G(t), dump);
  } else if (what == "group-H") {
    j = fc::io::group_to_json(fc::build_singer(t).H, dump);
  } else {
    j = fc::io::flag_code_to_json(fc::build_odfc(t));
  }
  j["tower"] = fc::io::tower_to_json(t);
  j["what"] = what;
  write_json(j, out);
  return kOk;
}

int cmd_verify(const TowerArgs& a, const std::string& suite, const std::string& out) {
  const auto t = make_tower(a);
  const auto rep = fc::verify(t, suite);
  json j = rep.to_json();
  j["suite"] = suite;
  write_json(j, out);
  return rep.passed() ? kOk : kVerifyFailed;
}

struct SimArgs {
  std::size_t trials = 100, erasures = 0, errordim = 0;
  std::uint64_t seed = 0;
  std::string shots = "random";
};

int cmd_simulate(const TowerArgs& a, const SimArgs& s) {
  const auto t = make_tower(a);
  const auto code = fc::build_odfc(t);
  fc::SimulationParams p;
  p.trials = s.trials;
  p.erasures = s.erasures;
  p.errordim = s.errordim;
  p.seed = s.seed;
  if (s.shots == "random") {
    p.mode = fc::ShotMode::random;
  } else if (s.shots == "all") {
    p.mode = fc::ShotMode::all;
  } else {
    p.mode = fc::ShotMode::list;
    for (auto v : parse_csv(s.shots)) {
      if (v == 0) throw fc::InvalidArgument("--shots positions are 1-based");
      p.shots.push_back(v - 1);
    }
  }
  const auto sum = fc::simulate(code, p, [](const fc::TrialRecord& r) {
    std::cout << fc::io::trial_to_json(r).dump() << '\n';
  });
  std::cout << fc::io::summary_to_json(sum).dump() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimum-distance full flag codes on F_q^2k"};
  app.require_subcommand(1);

  TowerArgs tower;
  std::string out = "-";

  auto* construct = app.add_subcommand("construct", "build a spread, group or flag code and write it as JSON");
  add_tower_options(construct, tower);
  std::string what;
  bool dump = false;
  construct->add_option("--what", what)->required()->check(CLI::IsMember({"spread", "group-G", "group-H", "odfc"}));
  construct->add_option("--out", out, "output path, '-' for stdout")->default_val("-");
  construct->add_flag("--dump-elements", dump, "include every group element");

  auto* verify = app.add_subcommand("verify", "run check suites and print a verification report");
  add_tower_options(verify, tower);
  std::string suite = "all";
  verify->add_option("--suite", suite)->default_val("all")->check(CLI::IsMember(fc::suite_names()));
  verify->add_option("--out", out, "output path, '-' for stdout")->default_val("-");

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo the multishot channel on the constructed code");
  add_tower_options(simulate, tower);
  SimArgs sim;
  simulate->add_option("--trials", sim.trials)->required();
  simulate->add_option("--erasures", sim.erasures)->default_val(0);
  simulate->add_option("--errordim", sim.errordim)->default_val(0);
  simulate->add_option("--seed", sim.seed)->default_val(0);
  simulate->add_option("--shots", sim.shots, "random (one admissible shot per trial), all, or 1-based list like 1,2")
      ->default_val("random");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) return cmd_construct(tower, what, out, dump);
    if (*verify) return cmd_verify(tower, suite, out);
    return cmd_simulate(tower, sim);
  } catch (const fc::CapExceeded& e) {
    std::cerr << "flagcodes: " << e.what() << " (raise FLAGCODES_CAP to allow more)\n";
    return kCap;
  } catch (const fc::InvalidArgument& e) {
    std::cerr << "flagcodes: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "flagcodes: internal error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}
