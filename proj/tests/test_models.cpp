#include <cmath>
#include <numbers>

#include "doctest.h"
#include "thermoid/cli/expression.hpp"
#include "thermoid/derivcalc/codes.hpp"
#include "thermoid/error.hpp"
#include "thermoid/models/evaluate.hpp"
#include "thermoid/models/gas_model.hpp"
#include "thermoid/models/oracle.hpp"
#include "thermoid/models/quadrature.hpp"
#include "thermoid/models/state_grid.hpp"
#include "thermoid/models/sweep.hpp"

using namespace thermoid;
using namespace thermoid::models;
using derivcalc::DerivTriple;
using ratfun::Primitive;

namespace {

double eval(const GasModel& m, const char* text, StatePoint s) {
  return eval_quantity(m, cli::parse_expression(text), s);
}

}  // namespace

TEST_CASE("ideal gas closed forms") {
  const GasModel m = GasModel::ideal_gas(5.0 / 3.0);
  const PrimitiveValuation v = m.valuation({2, 3});
  // u = x y and v = (ln x + gamma ln y)/(gamma - 1) differentiated by hand.
  CHECK(v[Primitive::F] == doctest::Approx(6).epsilon(1e-15));
  CHECK(v[Primitive::F1] == doctest::Approx(3).epsilon(1e-15));
  CHECK(v[Primitive::F2] == doctest::Approx(2).epsilon(1e-15));
  CHECK(v[Primitive::G1] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(v[Primitive::G2] == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(v[Primitive::F12] == 1);
  CHECK(v[Primitive::G11] == doctest::Approx(-0.375).epsilon(1e-15));
  CHECK(v[Primitive::G22] == doctest::Approx(-2.5 / 9.0).epsilon(1e-15));
  CHECK(v.jacobian() == doctest::Approx(1).epsilon(1e-15));
  CHECK_THROWS_AS(m.valuation({-1, 3}), DomainError);
  CHECK_FALSE(m.in_domain({2, 0}));
  CHECK_THROWS_AS(GasModel::ideal_gas(1.0), UsageError);
}

TEST_CASE("van der Waals closed forms") {
  const GasModel m = GasModel::van_der_waals(1, 0.5, 1.4);
  const PrimitiveValuation v = m.valuation({2, 3});
  // P = x + a/y^2 = 19/9, Q = y - b = 5/2.
  CHECK(v[Primitive::F] == doctest::Approx(19.0 / 9.0 * 2.5).epsilon(1e-14));
  CHECK(v[Primitive::F1] == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(v[Primitive::F2] == doctest::Approx(19.0 / 9.0 - 5.0 / 27.0).epsilon(1e-14));
  CHECK(v[Primitive::G1] == doctest::Approx(2.5 * 9.0 / 19.0).epsilon(1e-14));
  CHECK(v.jacobian() == doctest::Approx(1).epsilon(1e-13));
  CHECK_FALSE(m.in_domain({2, 0.4}));
}

TEST_CASE("van der Waals with a = b = 0 is the ideal gas") {
  const GasModel ideal = GasModel::ideal_gas(1.4);
  const GasModel vdw = GasModel::van_der_waals(0, 0, 1.4);
  for (StatePoint s : state_grid(0.5, 4, 6, 0.5, 4, 6)) {
    const PrimitiveValuation a = ideal.valuation(s);
    const PrimitiveValuation b = vdw.valuation(s);
    for (ratfun::Primitive p : ratfun::kAllPrimitives)
      CHECK(std::abs(a[p] - b[p]) <= 1e-14 * (1 + std::abs(a[p])));
  }
}

TEST_CASE("Jacobian invariant on default grids") {
  const GasModel ideal = GasModel::ideal_gas(1.4);
  CHECK(check_jacobian(ideal, ideal.default_grid(), 1e-12).passed);
  const GasModel vdw = GasModel::van_der_waals(1, 0.5, 1.4);
  const auto vdw_grid = state_grid(1.5, 4, 5, 1, 3, 5);
  const JacobianCheck vc = check_jacobian(vdw, vdw_grid, 1e-9);
  CHECK(vc.passed);
  CHECK(vc.states == 25);
  const GasModel feynman = GasModel::synthesis({1.4, 0.01}, 0, 0);
  CHECK(check_jacobian(feynman, state_grid(1, 3, 5, 1, 3, 5), 1e-6).passed);
  const GasModel constant = GasModel::synthesis({1.4}, 0.3, 0.2);
  CHECK(check_jacobian(constant, constant.default_grid(), 1e-8).passed);
  const GasModel real = GasModel::synthesis({1.4, 0.02}, 0.5, 0.25);
  CHECK(check_jacobian(real, real.default_grid(), 1e-6).passed);
}

TEST_CASE("synthesis model rejects gamma <= 1") {
  CHECK_THROWS_AS(GasModel::synthesis({1.0}, 0, 0), DomainError);
  CHECK_THROWS_AS(GasModel::synthesis({}, 0, 0), UsageError);
  // gamma(w) = 2 - w/2 drops to 1 at w = 2.
  const GasModel m = GasModel::synthesis({2.0, -0.5}, 0, 0);
  CHECK_THROWS_AS(m.valuation({2, 2}), DomainError);
}

TEST_CASE("synthesis temperature is a primitive of 1/(gamma - 1)") {
  const GasModel m = GasModel::synthesis({1.5}, 0, 0);
  // gamma = 3/2 constant: phi(w) = 2 (w - 1), v = ln y / 2.
  const PrimitiveValuation v = m.valuation({2, 3});
  CHECK(v[Primitive::F] == doctest::Approx(10).epsilon(1e-9));
  CHECK(v[Primitive::G] == doctest::Approx(std::log(3.0) / 2).epsilon(1e-12));
}

TEST_CASE("mixed partials of f and g commute numerically") {
  const GasModel models[] = {GasModel::ideal_gas(5.0 / 3.0), GasModel::van_der_waals(1, 0.5, 1.4),
                             GasModel::synthesis({1.4, 0.02}, 0.5, 0.25)};
  for (const GasModel& m : models) {
    for (StatePoint s : {StatePoint{2, 2}, StatePoint{2.5, 3}}) {
      for (int k = 0; k < 2; ++k) {
        auto component = [&](int axis) {
          return [&, axis](StatePoint p) {
            return richardson_gradient([&](StatePoint q) { return m.temperature_entropy(q)[k]; }, p,
                                       1e-4)[axis];
          };
        };
        const double dxy = richardson_gradient(component(0), s, 1e-3)[1];
        const double dyx = richardson_gradient(component(1), s, 1e-3)[0];
        CAPTURE(m.name());
        CHECK(std::abs(dxy - dyx) <= 1e-5);
      }
    }
  }
}

TEST_CASE("evaluating expressions at a state") {
  const GasModel m = GasModel::ideal_gas(5.0 / 3.0);
  CHECK(eval(m, "cp - cv", {2, 3}) == doctest::Approx(1).epsilon(1e-12));
  CHECK(eval(m, "D(3,1,2)", {2, 3}) == doctest::Approx(3).epsilon(1e-12));
  CHECK(eval(m, "cp", {2, 3}) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(eval(m, "cv", {2, 3}) == doctest::Approx(1.5).epsilon(1e-12));
  for (StatePoint s : {StatePoint{2, 3}, StatePoint{1, 1}, StatePoint{0.5, 4}})
    CHECK(std::abs(eval(m, "gamma", s) - 5.0 / 3.0) <= 1e-9);
  const GasModel others[] = {GasModel::van_der_waals(1, 0.5, 1.4), GasModel::synthesis({1.4, 0.02}, 0.5, 0.25)};
  for (const GasModel& g : others) CHECK(std::abs(eval(g, "J(3,4;1,2)", {2, 3}) - 1) <= 1e-9);
  CHECK_THROWS_AS(eval(m, "E + 1", {2, 3}), UnsupportedQuantity);
  CHECK_THROWS_AS(eval(m, "x", {-2, 3}), DomainError);
  // (T, W) is not a chart for the ideal gas: enthalpy depends on T only.
  CHECK_THROWS_AS(eval(m, "D(1,3,6)", {2, 3}), DegenerateCoordinates);
}

TEST_CASE("finite-difference oracle") {
  const GasModel m = GasModel::ideal_gas(5.0 / 3.0);
  const StatePoint s{2, 3};
  CHECK(std::abs(oracle_triple(m, DerivTriple::make(3, 1, 2), s) - 3) <= 1e-6);
  CHECK(std::abs(oracle_triple(m, DerivTriple::make(1, 3, 4), s) - 5.0 / 6.0) <= 1e-5);
  CHECK(std::abs(oracle_triple(m, DerivTriple{derivcalc::QuantityCode(3), derivcalc::QuantityCode(3),
                                              derivcalc::QuantityCode(4)},
                               s) -
                 1) <= 1e-8);
  CHECK_THROWS_AS(oracle_triple(m, DerivTriple::make(1, 6, 8), s), DegenerateCoordinates);
  // Richardson-corrected central differences are exact for cubics up to rounding.
  const auto grad = richardson_gradient([](StatePoint p) { return p.x * p.x * p.x + p.x * p.y; }, {1.5, 2},
                                        default_step_scale());
  CHECK(grad[0] == doctest::Approx(3 * 2.25 + 2).epsilon(1e-9));
  CHECK(grad[1] == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("symbolic triples agree with the oracle") {
  const GasModel m = GasModel::ideal_gas(5.0 / 3.0);
  const SweepResult r = sweep_triples(m, {2, 3});
  CHECK(r.checked + r.degenerate == 336);
  CHECK(r.checked >= 300);
  CHECK(r.max_deviation <= 1e-5);
  const GasModel vdw = GasModel::van_der_waals(1, 0.5, 1.4);
  const SweepResult rv = sweep_triples(vdw, {2, 3});
  CHECK(rv.checked + rv.degenerate == 336);
  CHECK(rv.max_deviation <= 1e-5);
}

TEST_CASE("symbolic second derivatives agree with the oracle") {
  const GasModel m = GasModel::ideal_gas(5.0 / 3.0);
  const SweepResult r = sweep_seconds(m, {2, 3}, 100, 7);
  CHECK(r.checked == 100);
  CHECK(r.max_deviation <= 1e-4);
}

TEST_CASE("adaptive Simpson quadrature") {
  auto sine = [](double t) { return std::sin(t); };
  CHECK(adaptive_simpson(sine, 0, std::numbers::pi, 1e-12) == doctest::Approx(2).epsilon(1e-10));
  CHECK(adaptive_simpson(sine, std::numbers::pi, 0, 1e-12) == doctest::Approx(-2).epsilon(1e-10));
  CHECK(adaptive_simpson([](double t) { return 1 / t; }, 1, std::numbers::e, 1e-12) ==
        doctest::Approx(1).epsilon(1e-10));
  CHECK(adaptive_simpson(sine, 1, 1, 1e-12) == 0);
}

TEST_CASE("state grids and number parsing") {
  const auto grid = state_grid(1, 2, 3, 5, 6, 2);
  REQUIRE(grid.size() == 6);
  CHECK(grid.front() == StatePoint{1, 5});
  CHECK(grid[1] == StatePoint{1, 6});
  CHECK(grid.back() == StatePoint{2, 6});
  CHECK(parse_state_grid("1:2:3,5:6:2") == grid);
  CHECK(parse_state("2,3") == StatePoint{2, 3});
  CHECK(parse_state(" 1.5 , 7/2 ") == StatePoint{1.5, 3.5});
  CHECK(parse_number("7/5") == doctest::Approx(1.4));
  CHECK(parse_number("-0.25") == -0.25);
  CHECK_THROWS_AS(parse_number("1/0"), UsageError);
  CHECK_THROWS_AS(parse_number("abc"), UsageError);
  CHECK_THROWS_AS(parse_state("2"), UsageError);
  CHECK_THROWS_AS(parse_state_grid("1:2,3:4:5"), UsageError);
  CHECK_THROWS_AS(parse_state_grid("1:2:0,3:4:5"), UsageError);
}
