#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace flagcodes {

/// Outcome of one executable check: expected vs computed values plus any
/// itemised violations. A check passes iff no violation was recorded.
struct CheckReport {
  std::string name;
  nlohmann::json expected;
  nlohmann::json computed;
  std::vector<std::string> violations;
  double elapsed_ms = 0;

  bool passed() const noexcept { return violations.empty(); }
  void fail(std::string why) { violations.push_back(std::move(why)); }
  /// Record a violation unless `ok`.
  bool require(bool ok, const std::string& why) {
    if (!ok) fail(why);
    return ok;
  }
  /// Set expected/computed and fail on mismatch.
  template <class T>
  bool expect_eq(const T& exp, const T& got, const std::string& what = "value") {
    expected = exp;
    computed = got;
    return require(exp == got, what + " mismatch");
  }
  void absorb(const CheckReport& other) {
    for (const auto& v : other.violations) violations.push_back(other.name + ": " + v);
  }
};

/// Runs `body(report)` and stamps the wall time.
template <class Fn>
CheckReport timed_check(std::string name, Fn&& body) {
  CheckReport r;
  r.name = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace flagcodes
