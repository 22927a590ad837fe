#pragma once

#include <string>

#include "thermoid/polyalg/polynomial.hpp"
#include "thermoid/ratfun/alphabet.hpp"

namespace thermoid::ratfun {

/// Order used for canonical rendering and denominator sign normalization.
inline constexpr polyalg::MonomialOrder kCanonicalOrder = polyalg::MonomialOrder::grlex();

/// Quotient of two polynomials over the primitive alphabet, kept in lowest terms:
/// numerator and denominator share no polynomial factor, and the denominator has
/// integer coprime coefficients with positive leading coefficient. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction();
  RationalFunction(polyalg::Polynomial numerator);  // NOLINT: polynomials embed implicitly
  /// Throws DivisionByZero when the denominator is the zero polynomial.
  RationalFunction(polyalg::Polynomial numerator, polyalg::Polynomial denominator);

  static RationalFunction constant(const polyalg::Rational& value);
  static RationalFunction symbol(Primitive p);

  const polyalg::Polynomial& numerator() const noexcept { return num_; }
  const polyalg::Polynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }

  /// Highest differential order of any symbol present (-1 for constants).
  int max_order() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws DivisionByZero when b is zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction pow(unsigned exponent) const;

  /// Structural equality of the normalized forms.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  /// "num / den", with " / den" omitted when den is 1. Compound sides are not
  /// parenthesized; the slash separates the two canonical polynomials.
  std::string to_string() const;

 private:
  struct Normalized {};
  RationalFunction(polyalg::Polynomial numerator, polyalg::Polynomial denominator, Normalized);

  polyalg::Polynomial num_;
  polyalg::Polynomial den_;
};

/// True iff a.num * b.den - b.num * a.den is the zero polynomial. No constraint
/// ideal is involved.
bool rf_equal(const RationalFunction& a, const RationalFunction& b);

/// Derivative along x or y through the derivation table (quotient rule).
/// Throws OrderCapExceeded if a second-order symbol would be differentiated.
RationalFunction total_derivative(const RationalFunction& rf, Axis axis);
polyalg::Polynomial total_derivative(const polyalg::Polynomial& p, Axis axis);

}  // namespace thermoid::ratfun
