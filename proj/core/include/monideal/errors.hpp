#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monideal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Exponent arithmetic left the 64-bit budget.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Input is well-formed but outside an operation's domain (zero ideal passed
/// to decompose, non-squarefree ideal to the power-equivalence check, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed ideal or monomial literal. `position()` is a 0-based offset into
/// the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace monideal
