#pragma once

#include <span>
#include <vector>

#include "thermoid/polyalg/polynomial.hpp"

namespace thermoid::polyalg {

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division. At each step the current leading term is divided by the
/// first divisor (in list order) whose leading term divides it; otherwise it moves
/// to the remainder. p == sum(quotients[i] * divisors[i]) + remainder.
DivisionResult divide(const Polynomial& p, std::span<const Polynomial> divisors,
                      const MonomialOrder& order);

/// Remainder of `divide`. An empty divisor list returns p unchanged.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors,
                       const MonomialOrder& order);

/// (L/lt(p))*p - (L/lt(q))*q with L the lcm of the leading monomials.
Polynomial s_polynomial(const Polynomial& p, const Polynomial& q, const MonomialOrder& order);

}  // namespace thermoid::polyalg
