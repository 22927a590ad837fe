#pragma once

#include <random>
#include <vector>

#include "doctest.h"
#include "thermoid/polyalg/polynomial.hpp"
#include "thermoid/ratfun/rational_function.hpp"

namespace thermoid::testing {

inline constexpr int kPropertyInstances = 500;

/// Polynomial with up to `terms` terms, each variable exponent <= max_exp,
/// coefficients small integers or halves.
inline polyalg::Polynomial random_poly(std::mt19937_64& rng, const polyalg::VariableSet& vars, int terms,
                                       unsigned max_exp) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 2);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::vector<polyalg::Term> out;
  for (int i = 0; i < terms; ++i) {
    std::vector<polyalg::Monomial::Exponent> e(vars.size());
    for (auto& x : e) x = exp(rng);
    out.push_back({polyalg::Monomial(std::move(e)), polyalg::Rational(coef(rng), den(rng))});
  }
  return polyalg::Polynomial::from_terms(vars, std::move(out));
}

/// Exact value of p at a rational point; an oracle independent of the arithmetic under test.
inline polyalg::Rational eval_exact(const polyalg::Polynomial& p, const std::vector<polyalg::Rational>& point) {
  polyalg::Rational sum = 0;
  for (const polyalg::Term& t : p.terms()) {
    polyalg::Rational term = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (unsigned k = 0; k < t.monomial[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

inline std::vector<polyalg::Rational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<polyalg::Rational> out;
  for (std::size_t i = 0; i < n; ++i) {
    polyalg::Rational q(num(rng), den(rng));
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

/// Polynomial in the first-order primitives (x, y, f, g, f1, f2, g1, g2).
inline polyalg::Polynomial random_first_order(std::mt19937_64& rng, int terms) {
  const polyalg::VariableSet& vars = ratfun::primitive_variables();
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<unsigned> exp(0, 1);
  std::vector<polyalg::Term> out;
  for (int i = 0; i < terms; ++i) {
    std::vector<polyalg::Monomial::Exponent> e(vars.size(), 0);
    for (std::size_t k = 0; k < 8; ++k) e[k] = exp(rng);
    out.push_back({polyalg::Monomial(std::move(e)), polyalg::Rational(coef(rng))});
  }
  return polyalg::Polynomial::from_terms(vars, std::move(out));
}

inline ratfun::RationalFunction random_rf(std::mt19937_64& rng) {
  polyalg::Polynomial den = random_first_order(rng, 2);
  while (den.is_zero()) den = random_first_order(rng, 2);
  return ratfun::RationalFunction(random_first_order(rng, 3), den);
}

}  // namespace thermoid::testing

namespace doctest {
template <>
struct StringMaker<thermoid::polyalg::Polynomial> {
  static String convert(const thermoid::polyalg::Polynomial& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<thermoid::ratfun::RationalFunction> {
  static String convert(const thermoid::ratfun::RationalFunction& r) { return r.to_string().c_str(); }
};
}  // namespace doctest
