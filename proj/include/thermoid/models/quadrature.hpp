#pragma once

#include <functional>

namespace thermoid::models {

/// Adaptive Simpson quadrature of fn over [a, b] (a > b gives the negated
/// integral). Subintervals are accepted once |S2 - S1| <= 15 tol, with the
/// Richardson-corrected value S2 + (S2 - S1)/15.
double adaptive_simpson(const std::function<double(double)>& fn, double a, double b,
                        double tolerance, int max_depth = 50);

}  // namespace thermoid::models
