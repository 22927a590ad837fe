#include "thermoid/models/evaluate.hpp"

#include <cmath>

#include "thermoid/error.hpp"
#include "thermoid/prover/expand.hpp"

namespace thermoid::models {

double evaluate(const polyalg::Polynomial& p, const PrimitiveValuation& values) {
  double sum = 0;
  for (const polyalg::Term& t : p.terms()) {
    double term = t.coefficient.get_d();
    for (std::size_t i = 0; i < ratfun::kPrimitiveCount; ++i)
      if (auto e = t.monomial[i]) term *= std::pow(values.values[i], static_cast<int>(e));
    sum += term;
  }
  return sum;
}

double evaluate(const ratfun::RationalFunction& rf, const PrimitiveValuation& values) {
  double den = evaluate(rf.denominator(), values);
  if (std::abs(den) < kDenominatorFloor)
    throw DegenerateCoordinates("denominator " + rf.denominator().to_string(ratfun::kCanonicalOrder) +
                                " vanishes numerically");
  return evaluate(rf.numerator(), values) / den;
}

double eval_quantity(const GasModel& model, const ratfun::RationalFunction& rf, StatePoint s) {
  return evaluate(rf, model.valuation(s));
}

double eval_quantity(const GasModel& model, const cli::Expression& e, StatePoint s) {
  return eval_quantity(model, prover::expand(e), s);
}

}  // namespace thermoid::models
