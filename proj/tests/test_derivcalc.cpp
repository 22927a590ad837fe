#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "thermoid/derivcalc/calculus.hpp"
#include "thermoid/derivcalc/codes.hpp"
#include "thermoid/derivcalc/enumerate.hpp"
#include "thermoid/error.hpp"
#include "thermoid/polyalg/parse.hpp"

using namespace thermoid;
using namespace thermoid::derivcalc;
using ratfun::Axis;
using ratfun::RationalFunction;
using thermoid::testing::kPropertyInstances;

namespace {

RationalFunction R(const char* num, const char* den = "1") {
  const auto& vars = ratfun::primitive_variables();
  return RationalFunction(polyalg::parse_polynomial(num, vars), polyalg::parse_polynomial(den, vars));
}

QuantityCode Q(int v) { return QuantityCode(v); }

RationalFunction D(int a, int b, int c) { return deriv_triple(DerivTriple::make(a, b, c)); }
RationalFunction J(int a, int b, int c, int d) { return jacobian(JacobianSpec::make(a, b, c, d)); }

}  // namespace

TEST_CASE("quantity codes and notation") {
  CHECK_THROWS_AS(QuantityCode(0), UsageError);
  CHECK_THROWS_AS(QuantityCode(9), UsageError);
  CHECK(Q(5).is_energy());
  CHECK_FALSE(Q(4).is_energy());
  CHECK(thermo_symbol(Q(5)) == "Phi");
  CHECK(neutral_symbol(Q(8)) == "E24");
  CHECK(quantity_from_text("T")->value() == 3);
  CHECK(quantity_from_text("W")->value() == 6);
  CHECK(quantity_from_text("7")->value() == 7);
  CHECK_FALSE(quantity_from_text("9").has_value());
  CHECK_FALSE(quantity_from_text("t").has_value());
  CHECK_THROWS_AS(DerivTriple::make(3, 1, 1), UsageError);
  CHECK_THROWS_AS(JacobianSpec::make(3, 4, 2, 2), UsageError);
  CHECK_THROWS_AS(SecondDerivSpec::make(3, 1, 2, 4, 4), UsageError);
  CHECK(to_string(DerivTriple::make(3, 1, 2)) == "(3,1,2)");
  CHECK(to_string(JacobianSpec::make(3, 4, 1, 2)) == "[3,4;1,2]");
  CHECK(to_string(SecondDerivSpec::make(3, 1, 2, 2, 1)) == "((3,1,2),2,1)");
}

TEST_CASE("base partials match the one-form table") {
  struct Entry {
    int code;
    Axis axis;
    const char* value;
  };
  const Entry table[] = {
      {1, Axis::x, "1"},          {1, Axis::y, "0"},          {2, Axis::x, "0"},
      {2, Axis::y, "1"},          {3, Axis::x, "f1"},         {3, Axis::y, "f2"},
      {4, Axis::x, "g1"},         {4, Axis::y, "g2"},         {5, Axis::x, "y - g f1"},
      {5, Axis::y, "-g f2"},      {6, Axis::x, "y + f g1"},   {6, Axis::y, "f g2"},
      {7, Axis::x, "-g f1"},      {7, Axis::y, "-x - g f2"},  {8, Axis::x, "f g1"},
      {8, Axis::y, "-x + f g2"},
  };
  for (const Entry& e : table) {
    CAPTURE(e.code);
    CHECK(base_partial(Q(e.code), e.axis) == R(e.value));
  }
}

TEST_CASE("energy partials agree with their one-forms") {
  // dE13 = -v du + y dx, dE14 = u dv + y dx, dE23 = -v du - x dy, dE24 = u dv - x dy.
  const RationalFunction u = R("f"), v = R("g"), x = R("x"), y = R("y");
  for (Axis axis : {Axis::x, Axis::y}) {
    const RationalFunction du = base_partial(Q(3), axis);
    const RationalFunction dv = base_partial(Q(4), axis);
    const RationalFunction dx = axis == Axis::x ? R("1") : R("0");
    const RationalFunction dy = axis == Axis::y ? R("1") : R("0");
    CHECK(base_partial(Q(5), axis) == -(v * du) + y * dx);
    CHECK(base_partial(Q(6), axis) == u * dv + y * dx);
    CHECK(base_partial(Q(7), axis) == -(v * du) - x * dy);
    CHECK(base_partial(Q(8), axis) == u * dv - x * dy);
  }
}

TEST_CASE("worked triples and Jacobians") {
  CHECK(D(3, 1, 2) == R("f1"));
  CHECK(D(3, 2, 1) == R("f2"));
  CHECK(D(4, 1, 2) == R("g1"));
  CHECK(D(4, 2, 1) == R("g2"));
  CHECK(D(3, 4, 1) == R("f2", "g2"));
  CHECK(D(2, 4, 1) == R("1", "g2"));
  CHECK(D(2, 1, 4) == R("-g1", "g2"));
  // These hold once f1 g2 - f2 g1 = 1; before reduction the Jacobian is explicit.
  CHECK(D(3, 1, 4) == R("f1 g2 - f2 g1", "g2"));
  CHECK(D(1, 3, 4) == R("g2", "f1 g2 - f2 g1"));
  CHECK(D(2, 3, 4) == R("-g1", "f1 g2 - f2 g1"));
  CHECK(D(1, 4, 3) == R("-f2", "f1 g2 - f2 g1"));
  CHECK(D(2, 4, 3) == R("f1", "f1 g2 - f2 g1"));
  CHECK(J(3, 4, 1, 2) == R("f1 g2 - f2 g1"));
  CHECK(J(3, 2, 4, 1) == R("-f1", "g2"));
  CHECK(D(3, 3, 4) == R("1"));
  CHECK(D(4, 3, 4) == R("0"));
  CHECK(J(3, 4, 3, 4) == R("1"));
  CHECK(J(3, 3, 1, 2) == R("0"));
  CHECK_THROWS_AS(jacobian(JacobianSpec{Q(1), Q(2), Q(3), Q(3)}), UsageError);
}

TEST_CASE("second derivatives") {
  auto DD = [](int a, int b, int c, int d, int e) { return second_deriv(SecondDerivSpec::make(a, b, c, d, e)); };
  CHECK(DD(3, 1, 2, 2, 1) == R("f12"));
  CHECK(DD(3, 1, 2, 1, 2) == R("f11"));
  CHECK(DD(3, 2, 1, 2, 1) == R("f22"));
  CHECK(DD(4, 2, 1, 1, 2) == R("g12"));
  // (1,2,3) = -f2/f1 along the isotherm dx/dy = -f2/f1, worked by hand.
  CHECK(DD(1, 2, 3, 2, 3) == R("-f1^2 f22 + 2 f1 f2 f12 - f2^2 f11", "f1^3"));
  CHECK(DD(8, 1, 2, 3, 4).max_order() == 2);
}

TEST_CASE("enumeration counts") {
  CHECK(count(SpecKind::triples) == 336);
  CHECK(count(SpecKind::jacobians) == 1680);
  CHECK(count(SpecKind::seconds) == 18816);
  CHECK(*triples().begin() == DerivTriple::make(1, 2, 3));
  DerivTriple last = DerivTriple::make(1, 2, 3);
  for (const DerivTriple& t : triples()) last = t;
  CHECK(last == DerivTriple::make(8, 7, 6));
}

TEST_CASE("first-order results stay in the first-order alphabet") {
  for (const DerivTriple& t : triples()) CHECK(deriv_triple(t).max_order() <= 1);
  for (const JacobianSpec& j : jacobians()) CHECK(jacobian(j).max_order() <= 1);
}

TEST_CASE("reciprocal law over all strict triples") {
  const RationalFunction one = R("1");
  int checked = 0;
  for (const DerivTriple& t : triples()) {
    const RationalFunction forward = deriv_triple(t);
    if (forward.is_zero()) continue;
    const RationalFunction back = deriv_triple(DerivTriple{t.b, t.a, t.c});
    CHECK(forward * back == one);
    ++checked;
  }
  CHECK(checked >= kPropertyInstances / 2);
  CHECK(checked == 336);
}

TEST_CASE("Jacobian antisymmetry and inversion") {
  const RationalFunction one = R("1");
  int checked = 0;
  for (const JacobianSpec& j : jacobians()) {
    const RationalFunction v = jacobian(j);
    CHECK(v == -jacobian(JacobianSpec{j.b, j.a, j.c, j.d}));
    CHECK(v == -jacobian(JacobianSpec{j.a, j.b, j.d, j.c}));
    if (v.is_zero()) continue;
    CHECK(v * jacobian(JacobianSpec{j.c, j.d, j.a, j.b}) == one);
    ++checked;
  }
  CHECK(checked >= kPropertyInstances);
}

TEST_CASE("Jacobian chain composition on random index sets") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> pick(1, 8);
  auto pair = [&] {
    int a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    return std::pair{a, b};
  };
  for (int i = 0; i < kPropertyInstances; ++i) {
    const auto [a, b] = pair();
    const auto [c, d] = pair();
    const auto [e, f] = pair();
    CAPTURE(i);
    CHECK(J(a, b, c, d) * J(c, d, e, f) == J(a, b, e, f));
  }
}

TEST_CASE("second derivatives agree with the chain-rule expansion") {
  // ((a,b,c),d,e) = ((a,b,c),1,2)(1,d,e) + ((a,b,c),2,1)(2,d,e).
  std::vector<SecondDerivSpec> all;
  for (const SecondDerivSpec& s : seconds()) all.push_back(s);
  std::mt19937_64 rng(32);
  std::shuffle(all.begin(), all.end(), rng);
  for (int i = 0; i < kPropertyInstances; ++i) {
    const SecondDerivSpec& s = all[i];
    CAPTURE(to_string(s));
    const RationalFunction phi_x = second_deriv(SecondDerivSpec{s.inner, Q(1), Q(2)});
    const RationalFunction phi_y = second_deriv(SecondDerivSpec{s.inner, Q(2), Q(1)});
    const RationalFunction expected =
        phi_x * deriv_triple(DerivTriple{Q(1), s.d, s.e}) + phi_y * deriv_triple(DerivTriple{Q(2), s.d, s.e});
    CHECK(second_deriv(s) == expected);
    CHECK(second_deriv(s).max_order() <= 2);
  }
}

TEST_CASE("coordinate partials along the axes are the total derivatives") {
  for (const DerivTriple& t : triples()) {
    const RationalFunction phi = deriv_triple(t);
    CHECK(second_deriv(SecondDerivSpec{t, Q(1), Q(2)}) == ratfun::total_derivative(phi, Axis::x));
    CHECK(second_deriv(SecondDerivSpec{t, Q(2), Q(1)}) == ratfun::total_derivative(phi, Axis::y));
  }
}
