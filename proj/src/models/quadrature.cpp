#include "thermoid/models/quadrature.hpp"

#include <cmath>

namespace thermoid::models {
namespace {

struct Panel {
  double a, b, fa, fm, fb, whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6 * (fa + 4 * fm + fb);
}

double refine(const std::function<double(double)>& fn, const Panel& p, double tol, int depth) {
  const double m = (p.a + p.b) / 2;
  const double lm = (p.a + m) / 2;
  const double rm = (m + p.b) / 2;
  const double flm = fn(lm);
  const double frm = fn(rm);
  const double left = simpson(p.a, m, p.fa, flm, p.fm);
  const double right = simpson(m, p.b, p.fm, frm, p.fb);
  const double delta = left + right - p.whole;
  if (depth <= 0 || std::abs(delta) <= 15 * tol) return left + right + delta / 15;
  return refine(fn, Panel{p.a, m, p.fa, flm, p.fm, left}, tol / 2, depth - 1) +
         refine(fn, Panel{m, p.b, p.fm, frm, p.fb, right}, tol / 2, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& fn, double a, double b,
                        double tolerance, int max_depth) {
  if (a == b) return 0;
  if (a > b) return -adaptive_simpson(fn, b, a, tolerance, max_depth);
  const double fa = fn(a);
  const double fb = fn(b);
  const double fm = fn((a + b) / 2);
  return refine(fn, Panel{a, b, fa, fm, fb, simpson(a, b, fa, fm, fb)}, tolerance, max_depth);
}

}  // namespace thermoid::models
