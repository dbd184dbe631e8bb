#pragma once

// Multishot subspace channel: each shot forwards a random generator matrix of
// one flag subspace with some rows erased and a random subspace added.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "flagcodes/errors.hpp"
#include "flagcodes/flag.hpp"
#include "flagcodes/random.hpp"
#include "flagcodes/subspace.hpp"

namespace flagcodes {

struct ChannelConfig {
  std::vector<std::size_t> erasures;  // rows dropped, per shot
  std::vector<std::size_t> errordim;  // dimension of the added subspace, per shot
  std::uint64_t seed = 0;

  static ChannelConfig uniform(std::size_t shots, std::size_t e, std::size_t d, std::uint64_t seed) {
    return {std::vector<std::size_t>(shots, e), std::vector<std::size_t>(shots, d), seed};
  }
  /// Noise on one shot only.
  static ChannelConfig single_shot(std::size_t shots, std::size_t shot, std::size_t e, std::size_t d,
                                   std::uint64_t seed) {
    ChannelConfig c = uniform(shots, 0, 0, seed);
    c.erasures.at(shot) = e;
    c.errordim.at(shot) = d;
    return c;
  }

  /// Empty when valid for shot i of dimension t in F^n, else the reason.
  static std::optional<std::string> shot_problem(std::size_t e, std::size_t d, std::size_t t, std::size_t n) {
    if (e >= t) return "erasures " + std::to_string(e) + " >= dimension " + std::to_string(t);
    if (d + t > n) return "errordim " + std::to_string(d) + " + dimension " + std::to_string(t) + " > " + std::to_string(n);
    return std::nullopt;
  }

  void validate(const std::vector<std::size_t>& type, std::size_t n) const {
    if (erasures.size() != type.size() || errordim.size() != type.size())
      throw InvalidArgument("channel config has the wrong number of shots");
    for (std::size_t i = 0; i < type.size(); ++i)
      if (auto why = shot_problem(erasures[i], errordim[i], type[i], n))
        throw InvalidArgument("shot " + std::to_string(i + 1) + ": " + *why);
  }
};

struct ReceivedWord {
  std::vector<Subspace> shots;
  std::size_t ambient() const noexcept { return shots.empty() ? 0 : shots[0].ambient(); }
  friend bool operator==(const ReceivedWord&, const ReceivedWord&) = default;
};

inline ReceivedWord transmit(const Flag& f, const ChannelConfig& cfg, Rng& rng) {
  cfg.validate(f.type(), f.ambient());
  const GaloisField& fld = f.field();
  const std::size_t n = f.ambient();
  ReceivedWord out;
  for (std::size_t i = 0; i < f.length(); ++i) {
    const Matrix& b = f[i].basis();
    const std::size_t t = b.rows();
    const Matrix scrambled = random_invertible(rng, fld, t) * b;
    Matrix kept = scrambled.block(0, 0, t - cfg.erasures[i], n);
    if (cfg.errordim[i] > 0) kept = Matrix::stack(kept, random_subspace(rng, fld, cfg.errordim[i], n).basis());
    out.shots.push_back(kept.rows() ? Subspace::from(kept) : Subspace::zero(fld, n));
  }
  return out;
}

/// Fully determined by cfg.seed.
inline ReceivedWord transmit(const Flag& f, const ChannelConfig& cfg) {
  Rng rng(cfg.seed);
  return transmit(f, cfg, rng);
}

struct DecodeResult {
  std::size_t index = 0;  // into code.flags()
  Flag flag;
  std::size_t distance = 0;
};

/// Codeword minimising sum_i d_S(F_i, R_i); the first in canonical order wins ties.
inline DecodeResult decode(const FlagCode& c, const ReceivedWord& r) {
  if (r.shots.size() != c.type().size()) throw InvalidArgument("received word length differs from the code's type");
  DecodeResult best;
  best.distance = std::numeric_limits<std::size_t>::max();
  for (std::size_t j = 0; j < c.size(); ++j) {
    const Flag& f = c.flags()[j];
    std::size_t d = 0;
    for (std::size_t i = 0; i < r.shots.size() && d < best.distance; ++i) d += subspace_distance(f[i], r.shots[i]);
    if (d < best.distance) best = {j, f, d};
  }
  return best;
}

enum class ShotMode { all, random, list };

struct SimulationParams {
  std::size_t trials = 0;
  std::size_t erasures = 0;
  std::size_t errordim = 0;
  std::uint64_t seed = 0;
  ShotMode mode = ShotMode::random;
  std::vector<std::size_t> shots;  // 0-based, for ShotMode::list
};

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t sent = 0;
  std::size_t decoded = 0;
  std::size_t shot = 0;  // 0-based noisy shot under ShotMode::random
  bool success = false;
  std::size_t distance = 0;
};

struct SimulationSummary {
  std::size_t trials = 0;
  std::size_t successes = 0;
  double rate() const { return trials ? double(successes) / double(trials) : 1.0; }
};

/// Shots on which (erasures, errordim) is admissible for this code.
inline std::vector<std::size_t> admissible_shots(const FlagCode& c, std::size_t e, std::size_t d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.type().size(); ++i)
    if (!ChannelConfig::shot_problem(e, d, c.type()[i], c.ambient())) out.push_back(i);
  return out;
}

/// Trial i uses seed + i: draws the sent codeword, then (random mode) the
/// noisy shot among admissible ones, then the channel noise, in that order.
template <class Sink>
SimulationSummary simulate(const FlagCode& c, const SimulationParams& p, Sink&& sink) {
  const std::size_t r = c.type().size();
  std::vector<std::size_t> noisy;
  if (p.mode == ShotMode::all) {
    for (std::size_t i = 0; i < r; ++i) noisy.push_back(i);
  } else if (p.mode == ShotMode::list) {
    noisy = p.shots;
  } else {
    noisy = admissible_shots(c, p.erasures, p.errordim);
    if (noisy.empty() && (p.erasures || p.errordim)) throw InvalidArgument("no shot admits this erasure/error setting");
  }
  auto cfg_for = [&](const std::vector<std::size_t>& shots, std::uint64_t seed) {
    ChannelConfig cfg = ChannelConfig::uniform(r, 0, 0, seed);
    for (auto s : shots) {
      if (s >= r) throw InvalidArgument("shot " + std::to_string(s + 1) + " out of range");
      cfg.erasures[s] = p.erasures;
      cfg.errordim[s] = p.errordim;
    }
    return cfg;
  };
  if (p.mode != ShotMode::random) cfg_for(noisy, 0).validate(c.type(), c.ambient());

  SimulationSummary sum;
  for (std::size_t i = 0; i < p.trials; ++i) {
    TrialRecord rec;
    rec.trial = i;
    rec.seed = p.seed + i;
    Rng rng(rec.seed);
    rec.sent = std::size_t(rng.below(c.size()));
    ChannelConfig cfg;
    if (p.mode == ShotMode::random && !noisy.empty()) {
      rec.shot = noisy[std::size_t(rng.below(noisy.size()))];
      cfg = cfg_for({rec.shot}, rec.seed);
    } else {
      cfg = cfg_for(p.mode == ShotMode::random ? std::vector<std::size_t>{} : noisy, rec.seed);
    }
    const auto received = transmit(c.flags()[rec.sent], cfg, rng);
    const auto dec = decode(c, received);
    rec.decoded = dec.index;
    rec.distance = dec.distance;
    rec.success = dec.index == rec.sent;
    ++sum.trials;
    if (rec.success) ++sum.successes;
    sink(rec);
  }
  return sum;
}

inline SimulationSummary simulate(const FlagCode& c, const SimulationParams& p) {
  return simulate(c, p, [](const TrialRecord&) {});
}

}  // namespace flagcodes
