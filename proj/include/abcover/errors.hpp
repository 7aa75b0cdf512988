#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abcover {

/// Base for every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 input. `offset` is the byte position inside the line,
/// `line` is the 1-based line number when the text came from a stream (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : Error(what), offset_(offset), line_(line) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

/// An exponential procedure was asked to run beyond its configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Iterative numerics failed to converge.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates corrupted input or a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace abcover
