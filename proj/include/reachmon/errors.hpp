#pragma once

#include <stdexcept>
#include <string>

namespace reachmon {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Incompatible dimensions or sizes between operands.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// Numerical breakdown (non-finite values, solver did not converge).
/// Never reported silently as a negative answer.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

/// Malformed input text. `line()` is 1-based; 0 means "no line context".
class FormatError : public Error {
 public:
  FormatError(int line, const std::string& msg)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace reachmon
