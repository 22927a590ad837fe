#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thermoid/polyalg/monomial.hpp"
#include "thermoid/polyalg/monomial_order.hpp"
#include "thermoid/polyalg/rational.hpp"
#include "thermoid/polyalg/variable_set.hpp"

namespace thermoid::polyalg {

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted in descending lexicographic order with no zero
/// coefficients, so two polynomials over the same VariableSet are equal exactly
/// when their term lists are equal. Other orders are applied on demand.
class Polynomial {
 public:
  explicit Polynomial(VariableSet vars = VariableSet());

  static Polynomial constant(VariableSet vars, const Rational& value);
  static Polynomial variable(VariableSet vars, std::size_t index);
  static Polynomial variable(VariableSet vars, std::string_view name);
  static Polynomial monomial(VariableSet vars, Monomial m, Rational coefficient = 1);
  /// Combines like terms and drops zeros; terms may arrive in any order.
  static Polynomial from_terms(VariableSet vars, std::vector<Term> terms);

  const VariableSet& vars() const noexcept { return vars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Value of the constant term (0 if absent).
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  Monomial::Exponent total_degree() const noexcept;
  /// Largest exponent of variable `index` over all terms.
  Monomial::Exponent degree_in(std::size_t index) const noexcept;

  /// Leading term under `order`; throws UsageError on the zero polynomial.
  const Term& leading_term(const MonomialOrder& order) const;
  Polynomial monic(const MonomialOrder& order) const;
  Polynomial scaled(const Rational& factor) const;
  Polynomial times_term(const Monomial& m, const Rational& coefficient) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

  /// Canonical text: terms descending in `order`, e.g. "2*x^2*y - 1/3*z + 1".
  std::string to_string(const MonomialOrder& order = MonomialOrder::lex()) const;

 private:
  Polynomial(VariableSet vars, std::vector<Term> sorted_terms);
  void require_same_vars(const Polynomial& other) const;

  VariableSet vars_;
  std::vector<Term> terms_;
};

/// Terms of `p` sorted descending in `order`.
std::vector<Term> terms_in_order(const Polynomial& p, const MonomialOrder& order);

/// Renders a single monomial as "x^2*y" ("1" for the unit monomial).
std::string monomial_to_string(const Monomial& m, const VariableSet& vars);

}  // namespace thermoid::polyalg
