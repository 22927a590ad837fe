#pragma once

#include "thermoid/cli/expression.hpp"
#include "thermoid/models/gas_model.hpp"
#include "thermoid/polyalg/polynomial.hpp"
#include "thermoid/ratfun/rational_function.hpp"

namespace thermoid::models {

/// Denominators smaller than this in magnitude are treated as vanishing.
inline constexpr double kDenominatorFloor = 1e-12;

double evaluate(const polyalg::Polynomial& p, const PrimitiveValuation& values);
/// Throws DegenerateCoordinates when |denominator| < kDenominatorFloor.
double evaluate(const ratfun::RationalFunction& rf, const PrimitiveValuation& values);

double eval_quantity(const GasModel& model, const ratfun::RationalFunction& rf, StatePoint s);
/// Expands the expression symbolically, then evaluates it at the model state.
/// Standalone energy values raise UnsupportedQuantity.
double eval_quantity(const GasModel& model, const cli::Expression& e, StatePoint s);

}  // namespace thermoid::models
