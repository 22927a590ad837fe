#include <algorithm>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "thermoid/error.hpp"
#include "thermoid/polyalg/division.hpp"
#include "thermoid/polyalg/groebner.hpp"
#include "thermoid/polyalg/parse.hpp"

using namespace thermoid;
using namespace thermoid::polyalg;
using thermoid::testing::kPropertyInstances;
using thermoid::testing::random_poly;

namespace {

const VariableSet& xy() {
  static const VariableSet v({"x", "y"});
  return v;
}
const VariableSet& xyz() {
  static const VariableSet v({"x", "y", "z"});
  return v;
}

std::vector<Polynomial> parse_all(std::initializer_list<const char*> texts, const VariableSet& vars) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, vars));
  return out;
}

bool same_basis(const GroebnerBasis& a, const GroebnerBasis& b) {
  return std::equal(a.generators().begin(), a.generators().end(), b.generators().begin(), b.generators().end());
}

bool is_reduced(const GroebnerBasis& gb) {
  const auto order = gb.order();
  for (const Polynomial& g : gb.generators()) {
    if (g.leading_term(order).coefficient != 1) return false;
    for (const Polynomial& h : gb.generators()) {
      if (&g == &h) continue;
      const Monomial& lt = h.leading_term(order).monomial;
      for (const Term& t : g.terms())
        if (lt.divides(t.monomial)) return false;
    }
  }
  return true;
}

std::vector<Polynomial> random_generators(std::mt19937_64& rng, const VariableSet& vars) {
  std::uniform_int_distribution<int> count(1, 3);
  std::vector<Polynomial> gens;
  const int n = count(rng);
  while (static_cast<int>(gens.size()) < n) {
    Polynomial g = random_poly(rng, vars, 3, 2);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace

TEST_CASE("hand-computed lex basis") {
  // x^2 - 1 and x y - 1: S-polynomial gives x - y, then y^2 - 1 follows.
  const auto gens = parse_all({"x^2 - 1", "x y - 1"}, xy());
  const GroebnerBasis gb = buchberger(gens, MonomialOrder::lex());
  REQUIRE(gb.size() == 2);
  CHECK(gb.generators()[0] == parse_polynomial("x - y", xy()));
  CHECK(gb.generators()[1] == parse_polynomial("y^2 - 1", xy()));
}

TEST_CASE("textbook grlex basis") {
  // Standard example: x^3 - 2xy and x^2 y - 2y^2 + x generate <x^2, xy, y^2 - x/2>.
  const auto gens = parse_all({"x^3 - 2x y", "x^2 y - 2y^2 + x"}, xy());
  const GroebnerBasis gb = buchberger(gens, MonomialOrder::grlex());
  const auto expected = parse_all({"x^2", "x y", "y^2 - 1/2 x"}, xy());
  REQUIRE(gb.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(gb.generators()[i] == expected[i]);
}

TEST_CASE("lex elimination exposes a univariate polynomial") {
  // x^2 + y^2 + z^2 - 1, x - y, y - z: the last lex element lives in z alone.
  const auto gens = parse_all({"x^2 + y^2 + z^2 - 1", "x - y", "y - z"}, xyz());
  const GroebnerBasis gb = buchberger(gens, MonomialOrder::lex());
  CHECK(gb.generators().back() == parse_polynomial("z^2 - 1/3", xyz()));
  CHECK(gb.contains(parse_polynomial("x - z", xyz())));
  CHECK_FALSE(gb.contains(parse_polynomial("x - 1", xyz())));
}

TEST_CASE("unit ideal and zero generators") {
  const auto gens = parse_all({"x y - 1", "x", "0"}, xy());
  const GroebnerBasis gb = buchberger(gens, MonomialOrder::grlex());
  REQUIRE(gb.size() == 1);
  CHECK(gb.generators()[0] == Polynomial::constant(xy(), 1));
}

TEST_CASE("criteria are applied") {
  const auto gens = parse_all({"x^2 - y", "y^2 - z", "z^2 - x", "x y z - 1"}, xyz());
  BuchbergerStats stats;
  const GroebnerBasis gb = buchberger(gens, MonomialOrder::grlex(), &stats);
  CHECK(stats.pairs_considered > 0);
  CHECK(stats.coprime_skips + stats.chain_skips > 0);
  CHECK(is_groebner_basis(std::vector<Polynomial>(gb.generators().begin(), gb.generators().end()), gb.order()));
}

TEST_CASE("mixed variable sets are rejected") {
  std::vector<Polynomial> gens{parse_polynomial("x", xy()), parse_polynomial("x", xyz())};
  CHECK_THROWS_AS(buchberger(gens, MonomialOrder::lex()), UsageError);
}

TEST_CASE("random ideals: basis properties and normal-form idempotence") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < kPropertyInstances; ++i) {
    const auto order = i % 2 == 0 ? MonomialOrder::lex() : MonomialOrder::grlex();
    const auto gens = random_generators(rng, xyz());
    const GroebnerBasis gb = buchberger(gens, order);
    const std::vector<Polynomial> g(gb.generators().begin(), gb.generators().end());
    CHECK(is_groebner_basis(g, order));
    CHECK(is_reduced(gb));
    for (const Polynomial& f : gens) CHECK(gb.contains(f));

    const Polynomial p = random_poly(rng, xyz(), 4, 3);
    const Polynomial r = gb.normal_form(p);
    CHECK(gb.normal_form(r) == r);
    CHECK(gb.contains(p - r));
    // A Groebner basis gives the same remainder for every divisor order.
    std::vector<Polynomial> reversed(g.rbegin(), g.rend());
    CHECK(normal_form(p, reversed, order) == r);
  }
}

TEST_CASE("random ideals: reduced basis is unique") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < kPropertyInstances; ++i) {
    const auto order = i % 2 == 0 ? MonomialOrder::lex() : MonomialOrder::grlex();
    auto gens = random_generators(rng, xyz());
    const GroebnerBasis a = buchberger(gens, order);

    std::shuffle(gens.begin(), gens.end(), rng);
    // Adding a member of the ideal, and rescaling, leaves the ideal unchanged.
    gens.push_back(gens.front() * random_poly(rng, xyz(), 2, 1));
    gens.front() = gens.front().scaled(Rational(-3, 2));
    const GroebnerBasis b = buchberger(gens, order);
    CHECK(same_basis(a, b));
  }
}
