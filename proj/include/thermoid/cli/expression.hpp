#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "thermoid/derivcalc/codes.hpp"
#include "thermoid/polyalg/rational.hpp"
#include "thermoid/ratfun/alphabet.hpp"

namespace thermoid::cli {

enum class NamedQuantity { cv, cp, gamma, cp_minus_cv };

std::string_view quantity_name(NamedQuantity q) noexcept;

enum class BinaryOp { add, sub, mul, div };

struct ExprNode;

/// Immutable expression tree. Copies share nodes.
class Expression {
 public:
  Expression();  // the literal 0

  static Expression literal(polyalg::Rational value);
  static Expression symbol(ratfun::Primitive p);
  static Expression energy_value(derivcalc::QuantityCode code);
  static Expression deriv(derivcalc::DerivTriple t);
  static Expression jacobian(derivcalc::JacobianSpec j);
  static Expression second(derivcalc::SecondDerivSpec s);
  static Expression named(NamedQuantity q);
  static Expression negate(Expression operand);
  static Expression binary(BinaryOp op, Expression lhs, Expression rhs);
  static Expression power(Expression base, unsigned exponent);

  const ExprNode& node() const noexcept { return *node_; }

  friend Expression operator+(Expression a, Expression b) { return binary(BinaryOp::add, std::move(a), std::move(b)); }
  friend Expression operator-(Expression a, Expression b) { return binary(BinaryOp::sub, std::move(a), std::move(b)); }
  friend Expression operator*(Expression a, Expression b) { return binary(BinaryOp::mul, std::move(a), std::move(b)); }
  friend Expression operator/(Expression a, Expression b) { return binary(BinaryOp::div, std::move(a), std::move(b)); }
  Expression operator-() const { return negate(*this); }

 private:
  explicit Expression(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ExprNode> node_;
};

namespace node {
struct Literal { polyalg::Rational value; };
struct Symbol { ratfun::Primitive symbol; };
/// A standalone energy (codes 5-8). Parsed so that evaluation can reject it clearly.
struct EnergyValue { derivcalc::QuantityCode code; };
struct Deriv { derivcalc::DerivTriple spec; };
struct Jacobian { derivcalc::JacobianSpec spec; };
struct Second { derivcalc::SecondDerivSpec spec; };
struct Named { NamedQuantity quantity; };
struct Negate { Expression operand; };
struct Binary { BinaryOp op; Expression lhs; Expression rhs; };
struct Power { Expression base; unsigned exponent; };
}  // namespace node

struct ExprNode {
  std::variant<node::Literal, node::Symbol, node::EnergyValue, node::Deriv, node::Jacobian,
               node::Second, node::Named, node::Negate, node::Binary, node::Power>
      value;
};

/// Recursive-descent parse of the expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | base ('^' unsigned)?
///   base   := integer | symbol | D(i,i,i) | J(i,i;i,i) | DD(i,i,i;i,i) | '(' expr ')'
/// where an index i is 1..8 or p, V, T, S, Phi, W, F, E. Throws ParseError with a
/// 1-based position.
Expression parse_expression(std::string_view text);

/// Text that parses back to an equivalent expression, parenthesized only where needed.
std::string render(const Expression& e);

}  // namespace thermoid::cli
