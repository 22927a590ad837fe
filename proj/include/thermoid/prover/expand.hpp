#pragma once

#include <string_view>
#include <vector>

#include "thermoid/cli/expression.hpp"
#include "thermoid/polyalg/polynomial.hpp"
#include "thermoid/ratfun/rational_function.hpp"

namespace thermoid::prover {

/// Defining expression of a named quantity:
///   cv = T*D(4,3,2), cp = T*D(4,3,1), gamma = cp/cv, cp_minus_cv = cp - cv.
cli::Expression named_quantity(cli::NamedQuantity q);
/// Throws UsageError for unknown names.
cli::Expression named_quantity(std::string_view name);

struct Expansion {
  ratfun::RationalFunction value;
  /// Every denominator met on the way (coordinate determinants, divisors),
  /// without duplicates. These are the side conditions of any identity built on
  /// this expansion.
  std::vector<polyalg::Polynomial> denominators;
};

/// Rewrites the expression over the primitive alphabet. Throws
/// UnsupportedQuantity for standalone energy values and DivisionByZero for
/// division by an identically zero subexpression.
Expansion expand_tracked(const cli::Expression& e);
ratfun::RationalFunction expand(const cli::Expression& e);

}  // namespace thermoid::prover
