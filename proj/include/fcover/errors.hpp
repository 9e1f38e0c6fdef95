#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fcover {

// Malformed expression text. position is a 0-based byte offset into the source.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Operands live in different rings, or a vector has the wrong length.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A Groebner computation hit its pair budget. Never converted into a verdict.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data violates a structural invariant (non-associative table, degenerate pairing, ...).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations disagree. Always a bug in this library.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fcover
