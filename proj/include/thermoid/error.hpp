#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thermoid {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated an operation's precondition (bad argument, mismatched variable sets).
class UsageError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Differentiation would need a symbol beyond second order.
class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A coordinate pair does not form a valid chart (Jacobian denominator vanishes).
class DegenerateCoordinates : public Error {
 public:
  using Error::Error;
};

/// State point outside a gas model's domain, or bad model parameters at evaluation time.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Energy functions are defined only up to a constant; their values cannot be evaluated.
class UnsupportedQuantity : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error("at position " + std::to_string(position) + ": " + message), position_(position) {}

  /// 1-based character position of the offending input.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace thermoid
