#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pprev {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed PLA directive or cube. `line()` is 1-based, 0 when unknown.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Two cubes assign different values to the same minterm output bit.
class ConflictError : public Error {
 public:
  using Error::Error;
};

/// A pattern or row whose length disagrees with the declared width.
class WidthError : public Error {
 public:
  using Error::Error;
};

/// Strict parsing found minterms covered by no cube.
class CoverageError : public Error {
 public:
  using Error::Error;
};

/// Parity preservation asked of a table with n != m.
class WidthMismatch : public Error {
 public:
  using Error::Error;
};

class NotReversible : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a configured size cap.
class TooLarge : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Unused inputs and outputs of a partial table cannot be matched class by class.
class InfeasibleCompletion : public Error {
 public:
  using Error::Error;
};

}  // namespace pprev
