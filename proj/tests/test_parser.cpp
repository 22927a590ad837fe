#include <random>
#include <string>

#include "doctest.h"
#include "support.hpp"
#include "thermoid/cli/expression.hpp"
#include "thermoid/error.hpp"
#include "thermoid/prover/expand.hpp"

using namespace thermoid;
using namespace thermoid::cli;
using derivcalc::QuantityCode;
using thermoid::testing::kPropertyInstances;

namespace {

bool same_tree(const Expression& a, const Expression& b) {
  const auto& va = a.node().value;
  const auto& vb = b.node().value;
  if (va.index() != vb.index()) return false;
  if (auto* x = std::get_if<node::Literal>(&va)) return x->value == std::get<node::Literal>(vb).value;
  if (auto* x = std::get_if<node::Symbol>(&va)) return x->symbol == std::get<node::Symbol>(vb).symbol;
  if (auto* x = std::get_if<node::EnergyValue>(&va)) return x->code == std::get<node::EnergyValue>(vb).code;
  if (auto* x = std::get_if<node::Deriv>(&va)) return x->spec == std::get<node::Deriv>(vb).spec;
  if (auto* x = std::get_if<node::Jacobian>(&va)) return x->spec == std::get<node::Jacobian>(vb).spec;
  if (auto* x = std::get_if<node::Second>(&va)) return x->spec == std::get<node::Second>(vb).spec;
  if (auto* x = std::get_if<node::Named>(&va)) return x->quantity == std::get<node::Named>(vb).quantity;
  if (auto* x = std::get_if<node::Negate>(&va)) return same_tree(x->operand, std::get<node::Negate>(vb).operand);
  if (auto* x = std::get_if<node::Power>(&va)) {
    const auto& y = std::get<node::Power>(vb);
    return x->exponent == y.exponent && same_tree(x->base, y.base);
  }
  const auto& x = std::get<node::Binary>(va);
  const auto& y = std::get<node::Binary>(vb);
  return x.op == y.op && same_tree(x.lhs, y.lhs) && same_tree(x.rhs, y.rhs);
}

std::size_t error_position(const std::string& text) {
  try {
    parse_expression(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}

class RandomExpression {
 public:
  explicit RandomExpression(std::uint64_t seed) : rng_(seed) {}

  Expression operator()(int depth) {
    if (depth == 0 || pick(0, 3) == 0) return leaf();
    switch (pick(0, 5)) {
      case 0: return -(*this)(depth - 1);
      case 1: return Expression::power((*this)(depth - 1), static_cast<unsigned>(pick(0, 3)));
      default: {
        const auto op = static_cast<BinaryOp>(pick(0, 3));
        Expression lhs = (*this)(depth - 1);
        return Expression::binary(op, std::move(lhs), (*this)(depth - 1));
      }
    }
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  QuantityCode code() { return QuantityCode(pick(1, 8)); }
  std::pair<QuantityCode, QuantityCode> distinct() {
    QuantityCode a = code(), b = code();
    while (b == a) b = code();
    return {a, b};
  }

  Expression leaf() {
    switch (pick(0, 6)) {
      case 0: return Expression::literal(pick(0, 12));
      case 1: return Expression::symbol(ratfun::kAllPrimitives[pick(0, ratfun::kPrimitiveCount - 1)]);
      case 2: return Expression::energy_value(QuantityCode(pick(5, 8)));
      case 3: {
        auto [b, c] = distinct();
        return Expression::deriv({code(), b, c});
      }
      case 4: {
        auto [a, b] = distinct();
        auto [c, d] = distinct();
        return Expression::jacobian({a, b, c, d});
      }
      case 5: {
        auto [b, c] = distinct();
        auto [d, e] = distinct();
        return Expression::second({{code(), b, c}, d, e});
      }
      default: return Expression::named(static_cast<NamedQuantity>(pick(0, 3)));
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace

TEST_CASE("coded derivatives accept thermodynamic symbols") {
  CHECK(same_tree(parse_expression("D(T,p,V)"), parse_expression("D(3,1,2)")));
  CHECK(same_tree(parse_expression("J(T,S;p,V)"), parse_expression("J(3,4;1,2)")));
  CHECK(same_tree(parse_expression("DD(E,p,V;S,T)"), parse_expression("DD(8,1,2;4,3)")));
  CHECK(same_tree(parse_expression("D( Phi , W,F )"), parse_expression("D(5,6,7)")));
  CHECK(same_tree(parse_expression("p*V - T*S"), parse_expression("x*y - f*g")));
}

TEST_CASE("named quantities and energies parse to their nodes") {
  CHECK(std::holds_alternative<node::Named>(parse_expression("cp_minus_cv").node().value));
  CHECK(std::holds_alternative<node::EnergyValue>(parse_expression("Phi").node().value));
  CHECK(std::holds_alternative<node::EnergyValue>(parse_expression("E").node().value));
  CHECK(std::holds_alternative<node::Symbol>(parse_expression("g12").node().value));
}

TEST_CASE("precedence and associativity") {
  const Expression e = parse_expression("1 - 2 - 3");
  const auto& top = std::get<node::Binary>(e.node().value);
  CHECK(top.op == BinaryOp::sub);
  CHECK(std::holds_alternative<node::Literal>(top.rhs.node().value));
  CHECK(same_tree(parse_expression("x + y*f^2"), parse_expression("x + (y*(f^2))")));
  CHECK(same_tree(parse_expression("-x^2"), parse_expression("-(x^2)")));
  CHECK(same_tree(parse_expression("x / y / f"), parse_expression("(x / y) / f")));
}

TEST_CASE("parse errors carry 1-based positions") {
  CHECK_THROWS_AS(parse_expression("D(3,1,1)"), ParseError);
  CHECK(error_position("D(3,1,1)") == 7);
  CHECK(error_position("J(1,2;3,3)") == 9);
  CHECK(error_position("DD(1,2,3;4,4)") == 12);
  CHECK(error_position("D(9,1,2)") == 3);
  CHECK(error_position("D(3,1)") == 6);
  CHECK(error_position("") == 1);
  CHECK(error_position("x + ") == 5);
  CHECK(error_position("x + h") == 5);
  CHECK(error_position("(x + y") == 7);
  CHECK(error_position("x y") == 3);
  CHECK(error_position("1.5 * x") == 2);
  CHECK(error_position("x ^ y") == 5);
  CHECK(error_position("x ^ 1234567") == 5);
}

TEST_CASE("rendering round-trips") {
  RandomExpression gen(51);
  for (int i = 0; i < kPropertyInstances; ++i) {
    const Expression e = gen(4);
    const std::string text = render(e);
    CAPTURE(text);
    const Expression back = parse_expression(text);
    CHECK(same_tree(e, back));
    CHECK(render(back) == text);
  }
}

TEST_CASE("symbol aliases expand identically") {
  const char* pairs[][2] = {
      {"D(T,p,V)", "D(3,1,2)"},
      {"D(S,V,p)", "D(4,2,1)"},
      {"J(p,V;T,S)", "J(1,2;3,4)"},
      {"cp_minus_cv", "cp - cv"},
      {"gamma", "cp / cv"},
      {"T*S", "f*g"},
  };
  for (const auto& [a, b] : pairs) {
    CAPTURE(a);
    CHECK(prover::expand(parse_expression(a)) == prover::expand(parse_expression(b)));
  }
}
