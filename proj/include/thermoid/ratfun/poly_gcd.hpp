#pragma once

#include <optional>

#include "thermoid/polyalg/polynomial.hpp"

namespace thermoid::ratfun {

/// Greatest common divisor in Q[vars], computed recursively by contents and
/// primitive pseudo-remainder sequences. The result has integer coprime
/// coefficients and a positive leading coefficient (lex); gcd(0, 0) = 0.
polyalg::Polynomial gcd(const polyalg::Polynomial& a, const polyalg::Polynomial& b);

/// a / b when b divides a exactly, nullopt otherwise. b must be nonzero.
std::optional<polyalg::Polynomial> divide_exact(const polyalg::Polynomial& a,
                                                const polyalg::Polynomial& b);

/// Rational factor c such that c * p has integer coprime coefficients whose
/// leading coefficient under `order` is positive. p must be nonzero.
polyalg::Rational primitive_scale(const polyalg::Polynomial& p, const polyalg::MonomialOrder& order);

}  // namespace thermoid::ratfun
