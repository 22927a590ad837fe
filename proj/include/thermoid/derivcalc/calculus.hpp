#pragma once

#include "thermoid/derivcalc/codes.hpp"
#include "thermoid/ratfun/rational_function.hpp"

namespace thermoid::derivcalc {

/// Partial of quantity `a` along a coordinate axis, holding the other coordinate:
/// (a,1,2) for Axis::x and (a,2,1) for Axis::y. Energy entries follow from their
/// one-forms, e.g. dE13 = -v du + y dx gives (5,1,2) = y - g f1.
ratfun::RationalFunction base_partial(QuantityCode a, ratfun::Axis axis);

/// Determinant (a,1,2)(b,2,1) - (a,2,1)(b,1,2) of base partials.
ratfun::RationalFunction base_determinant(QuantityCode a, QuantityCode b);

/// [a,b;c,d] = base_determinant(a,b) / base_determinant(c,d), without applying the
/// Maxwell constraint. Throws DegenerateCoordinates if the denominator is
/// identically zero.
ratfun::RationalFunction jacobian(const JacobianSpec& spec);

/// (a,b,c) = [a,c;b,c].
ratfun::RationalFunction deriv_triple(const DerivTriple& t);

/// ((a,b,c),d,e) by the chain rule: with phi = (a,b,c),
///   [phi_x (e,2,1) - phi_y (e,1,2)] / [(d,1,2)(e,2,1) - (d,2,1)(e,1,2)].
ratfun::RationalFunction second_deriv(const SecondDerivSpec& s);

}  // namespace thermoid::derivcalc
