#pragma once

#include <stdexcept>
#include <string>

namespace toggledyn {

// Malformed input or a violated precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource bound (state-space size, simulation window) was hit.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal arithmetic consistency failure (overflow, inexact division).
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw InvalidArgument(msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

}  // namespace toggledyn
