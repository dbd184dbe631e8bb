#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace flagcodes {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: wrong level, mismatched sizes, invalid type vector, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An enumeration or closure would exceed its configured element cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : Error(what + " exceeds cap of " + std::to_string(cap) + " elements"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// A proved identity failed to hold on computed data. Always an implementation bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

namespace caps {

inline constexpr std::size_t kGrassmannian = 1'000'000;
inline constexpr std::size_t kGroupClosure = 10'000'000;

/// FLAGCODES_CAP, when set to a positive integer, replaces every default cap.
inline std::size_t resolve(std::size_t fallback) {
  if (const char* env = std::getenv("FLAGCODES_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

}  // namespace caps
}  // namespace flagcodes
