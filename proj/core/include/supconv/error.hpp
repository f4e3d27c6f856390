#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace supconv {

enum class ErrorKind {
  InvalidInput,
  DegenerateInput,
  OutOfDomain,
  NotConstructed,
  MalformedFile,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

// Largest simplex dimension accepted at API boundaries.
inline constexpr int kMaxDimension = 6;

}  // namespace supconv
