#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace curveform {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero scalar") {}
};

class ArityMismatch : public Error {
 public:
  ArityMismatch(std::size_t lhs, std::size_t rhs)
      : Error("tensor arity mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& found)
      : Error(format(position, expected, found)),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(std::size_t position,
                            const std::vector<std::string>& expected,
                            const std::string& found) {
    std::string msg = "parse error at position " + std::to_string(position) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += expected.size() == i + 1 ? " or " : ", ";
      msg += expected[i];
    }
    return msg + ", found " + found;
  }

  std::size_t position_;
  std::vector<std::string> expected_;
};

class NonOrientable : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class DiamondFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace curveform
