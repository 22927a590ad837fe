#include "thermoid/prover/expand.hpp"

#include <algorithm>
#include <string>

#include "thermoid/derivcalc/calculus.hpp"
#include "thermoid/error.hpp"

namespace thermoid::prover {

using cli::Expression;
using cli::NamedQuantity;
using derivcalc::DerivTriple;
using ratfun::RationalFunction;

Expression named_quantity(NamedQuantity q) {
  const Expression t = Expression::symbol(ratfun::Primitive::F);
  switch (q) {
    case NamedQuantity::cv:
      return t * Expression::deriv(DerivTriple::make(4, 3, 2));
    case NamedQuantity::cp:
      return t * Expression::deriv(DerivTriple::make(4, 3, 1));
    case NamedQuantity::gamma:
      return named_quantity(NamedQuantity::cp) / named_quantity(NamedQuantity::cv);
    case NamedQuantity::cp_minus_cv:
      return named_quantity(NamedQuantity::cp) - named_quantity(NamedQuantity::cv);
  }
  throw UsageError("unknown named quantity");
}

Expression named_quantity(std::string_view name) {
  for (NamedQuantity q : {NamedQuantity::cv, NamedQuantity::cp, NamedQuantity::gamma, NamedQuantity::cp_minus_cv})
    if (cli::quantity_name(q) == name) return named_quantity(q);
  throw UsageError("unknown named quantity '" + std::string(name) + "'");
}

namespace {

class Expander {
 public:
  std::vector<polyalg::Polynomial> denominators;

  RationalFunction operator()(const Expression& e) {
    return std::visit([this](const auto& n) { return visit(n); }, e.node().value);
  }

 private:
  void note(const RationalFunction& divisor) {
    // The divisor vanishes exactly where its numerator does.
    const polyalg::Polynomial& p = divisor.numerator();
    if (p.is_constant()) return;
    if (std::find(denominators.begin(), denominators.end(), p) == denominators.end()) denominators.push_back(p);
  }
  void note_value(const RationalFunction& value) { note(RationalFunction(value.denominator())); }

  RationalFunction visit(const cli::node::Literal& n) { return RationalFunction::constant(n.value); }
  RationalFunction visit(const cli::node::Symbol& n) { return RationalFunction::symbol(n.symbol); }
  RationalFunction visit(const cli::node::EnergyValue& n) {
    throw UnsupportedQuantity("energy " + std::string(derivcalc::thermo_symbol(n.code)) +
                              " is defined only up to a constant and has no value");
  }
  RationalFunction visit(const cli::node::Deriv& n) {
    note(derivcalc::base_determinant(n.spec.b, n.spec.c));
    RationalFunction v = derivcalc::deriv_triple(n.spec);
    note_value(v);
    return v;
  }
  RationalFunction visit(const cli::node::Jacobian& n) {
    note(derivcalc::base_determinant(n.spec.c, n.spec.d));
    RationalFunction v = derivcalc::jacobian(n.spec);
    note_value(v);
    return v;
  }
  RationalFunction visit(const cli::node::Second& n) {
    note(derivcalc::base_determinant(n.spec.inner.b, n.spec.inner.c));
    note(derivcalc::base_determinant(n.spec.d, n.spec.e));
    RationalFunction v = derivcalc::second_deriv(n.spec);
    note_value(v);
    return v;
  }
  RationalFunction visit(const cli::node::Named& n) { return (*this)(named_quantity(n.quantity)); }
  RationalFunction visit(const cli::node::Negate& n) { return -(*this)(n.operand); }
  RationalFunction visit(const cli::node::Binary& n) {
    RationalFunction a = (*this)(n.lhs);
    RationalFunction b = (*this)(n.rhs);
    switch (n.op) {
      case cli::BinaryOp::add: return a + b;
      case cli::BinaryOp::sub: return a - b;
      case cli::BinaryOp::mul: return a * b;
      case cli::BinaryOp::div:
        if (b.is_zero()) throw DivisionByZero("division by an expression that is identically zero");
        note(b);
        return a / b;
    }
    throw UsageError("unknown operator");
  }
  RationalFunction visit(const cli::node::Power& n) {
    RationalFunction base = (*this)(n.base);
    RationalFunction result = RationalFunction::constant(1);
    for (unsigned i = 0; i < n.exponent; ++i) result = result * base;
    return result;
  }
};

}  // namespace

Expansion expand_tracked(const Expression& e) {
  Expander ex;
  RationalFunction value = ex(e);
  return {std::move(value), std::move(ex.denominators)};
}

RationalFunction expand(const Expression& e) { return expand_tracked(e).value; }

}  // namespace thermoid::prover
