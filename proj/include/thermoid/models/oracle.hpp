#pragma once

#include <array>
#include <functional>

#include "thermoid/derivcalc/codes.hpp"
#include "thermoid/models/gas_model.hpp"

namespace thermoid::models {

/// Gradient (d/dx, d/dy) by central differences with one Richardson step:
/// D(h) = (q(s+h) - q(s-h)) / 2h and (4 D(h/2) - D(h)) / 3, with
/// h = step_scale * max(1, |coordinate|).
std::array<double, 2> richardson_gradient(const std::function<double(StatePoint)>& q, StatePoint s,
                                          double step_scale);

/// cbrt(machine epsilon), the default step scale.
double default_step_scale();

/// Numeric gradient of quantity `code` at s using only model values of f and g.
/// Energies are obtained by integrating their one-forms along short segments
/// starting at s.
std::array<double, 2> quantity_gradient(const GasModel& model, derivcalc::QuantityCode code,
                                        StatePoint s);

/// (a,b,c) computed without the symbolic tables, as det d(a,c)/d(x,y) over
/// det d(b,c)/d(x,y) from finite-difference gradients. Throws
/// DegenerateCoordinates when |det d(b,c)| < 1e-10.
double oracle_triple(const GasModel& model, const derivcalc::DerivTriple& t, StatePoint s);

/// ((a,b,c),d,e) by differencing oracle_triple over a wider stencil.
double oracle_second(const GasModel& model, const derivcalc::SecondDerivSpec& spec, StatePoint s);

}  // namespace thermoid::models
