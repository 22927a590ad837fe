#include "thermoid/cli/expression.hpp"

namespace thermoid::cli {

std::string_view quantity_name(NamedQuantity q) noexcept {
  switch (q) {
    case NamedQuantity::cv: return "cv";
    case NamedQuantity::cp: return "cp";
    case NamedQuantity::gamma: return "gamma";
    case NamedQuantity::cp_minus_cv: return "cp_minus_cv";
  }
  return "?";
}

namespace {
template <class T>
std::shared_ptr<const ExprNode> make(T value) {
  return std::make_shared<const ExprNode>(ExprNode{std::move(value)});
}
}  // namespace

Expression::Expression() : node_(make(node::Literal{0})) {}

Expression Expression::literal(polyalg::Rational value) { return Expression(make(node::Literal{std::move(value)})); }
Expression Expression::symbol(ratfun::Primitive p) { return Expression(make(node::Symbol{p})); }
Expression Expression::energy_value(derivcalc::QuantityCode code) { return Expression(make(node::EnergyValue{code})); }
Expression Expression::deriv(derivcalc::DerivTriple t) { return Expression(make(node::Deriv{t})); }
Expression Expression::jacobian(derivcalc::JacobianSpec j) { return Expression(make(node::Jacobian{j})); }
Expression Expression::second(derivcalc::SecondDerivSpec s) { return Expression(make(node::Second{s})); }
Expression Expression::named(NamedQuantity q) { return Expression(make(node::Named{q})); }
Expression Expression::negate(Expression operand) { return Expression(make(node::Negate{std::move(operand)})); }
Expression Expression::binary(BinaryOp op, Expression lhs, Expression rhs) {
  return Expression(make(node::Binary{op, std::move(lhs), std::move(rhs)}));
}
Expression Expression::power(Expression base, unsigned exponent) {
  return Expression(make(node::Power{std::move(base), exponent}));
}

namespace {

// Binding strength: sums 1, products 2, prefix minus 3, powers 4, atoms 5.
int precedence(const Expression& e) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, node::Binary>)
          return n.op == BinaryOp::add || n.op == BinaryOp::sub ? 1 : 2;
        else if constexpr (std::is_same_v<T, node::Negate>)
          return 3;
        else if constexpr (std::is_same_v<T, node::Power>)
          return 4;
        else if constexpr (std::is_same_v<T, node::Literal>)
          return n.value < 0 ? 3 : (n.value.get_den() != 1 ? 2 : 5);
        else
          return 5;
      },
      e.node().value);
}

std::string idx(derivcalc::QuantityCode q) { return std::to_string(q.value()); }

std::string wrap(const Expression& e, int min_prec) {
  std::string s = render(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

std::string render(const Expression& e) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, node::Literal>) {
          if (n.value < 0) return "-" + polyalg::Rational(-n.value).get_str();
          return n.value.get_str();
        } else if constexpr (std::is_same_v<T, node::Symbol>) {
          return std::string(ratfun::primitive_name(n.symbol));
        } else if constexpr (std::is_same_v<T, node::EnergyValue>) {
          return std::string(derivcalc::thermo_symbol(n.code));
        } else if constexpr (std::is_same_v<T, node::Deriv>) {
          return "D(" + idx(n.spec.a) + "," + idx(n.spec.b) + "," + idx(n.spec.c) + ")";
        } else if constexpr (std::is_same_v<T, node::Jacobian>) {
          return "J(" + idx(n.spec.a) + "," + idx(n.spec.b) + ";" + idx(n.spec.c) + "," + idx(n.spec.d) + ")";
        } else if constexpr (std::is_same_v<T, node::Second>) {
          const auto& t = n.spec.inner;
          return "DD(" + idx(t.a) + "," + idx(t.b) + "," + idx(t.c) + ";" + idx(n.spec.d) + "," +
                 idx(n.spec.e) + ")";
        } else if constexpr (std::is_same_v<T, node::Named>) {
          return std::string(quantity_name(n.quantity));
        } else if constexpr (std::is_same_v<T, node::Negate>) {
          return "-" + wrap(n.operand, 3);
        } else if constexpr (std::is_same_v<T, node::Power>) {
          return wrap(n.base, 5) + "^" + std::to_string(n.exponent);
        } else {
          const bool additive = n.op == BinaryOp::add || n.op == BinaryOp::sub;
          const int prec = additive ? 1 : 2;
          const char* op = n.op == BinaryOp::add   ? " + "
                           : n.op == BinaryOp::sub ? " - "
                           : n.op == BinaryOp::mul ? "*"
                                                   : "/";
          // Left-associative: the right operand needs parentheses at equal precedence.
          return wrap(n.lhs, prec) + op + wrap(n.rhs, prec + 1);
        }
      },
      e.node().value);
}

}  // namespace thermoid::cli
