#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kirbykit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent textual input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called with arguments violating its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed: two methods disagree, or a computed
/// object violates an identity it must satisfy.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace kirbykit
