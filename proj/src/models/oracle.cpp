#include "thermoid/models/oracle.hpp"

#include <cmath>
#include <limits>

#include "thermoid/error.hpp"

namespace thermoid::models {
namespace {

constexpr double kSingularDeterminant = 1e-10;
// Differencing noise leaves about 1e-10 relative in a determinant that is
// exactly zero, so nearly parallel gradients count as singular too.
constexpr double kRelativeSingular = 1e-9;
// Trapezoid panels per integration segment for the energy one-forms.
constexpr int kEnergyPanels = 4;
// Outer step for differencing the first-derivative oracle.
constexpr double kOuterStepScale = 1e-3;

double det(const std::array<double, 2>& a, const std::array<double, 2>& c) {
  return a[0] * c[1] - a[1] * c[0];
}

bool singular(const std::array<double, 2>& a, const std::array<double, 2>& c) {
  const double d = std::abs(det(a, c));
  return d < kSingularDeterminant || d < kRelativeSingular * std::hypot(a[0], a[1]) * std::hypot(c[0], c[1]);
}

// Integral of the energy one-form for `code` (5..8) along the segment from -> to:
//   5: -v du + y dx   6: u dv + y dx   7: -v du - x dy   8: u dv - x dy
double energy_increment(const GasModel& model, int code, StatePoint from, StatePoint to) {
  double total = 0;
  StatePoint prev = from;
  auto prev_uv = model.temperature_entropy(from);
  for (int k = 1; k <= kEnergyPanels; ++k) {
    const double t = static_cast<double>(k) / kEnergyPanels;
    StatePoint cur{from.x + t * (to.x - from.x), from.y + t * (to.y - from.y)};
    auto uv = model.temperature_entropy(cur);
    const double du = uv[0] - prev_uv[0];
    const double dv = uv[1] - prev_uv[1];
    const double dx = cur.x - prev.x;
    const double dy = cur.y - prev.y;
    const double u = (uv[0] + prev_uv[0]) / 2;
    const double v = (uv[1] + prev_uv[1]) / 2;
    const double x = (cur.x + prev.x) / 2;
    const double y = (cur.y + prev.y) / 2;
    switch (code) {
      case 5: total += -v * du + y * dx; break;
      case 6: total += u * dv + y * dx; break;
      case 7: total += -v * du - x * dy; break;
      default: total += u * dv - x * dy; break;
    }
    prev = cur;
    prev_uv = uv;
  }
  return total;
}

}  // namespace

double default_step_scale() { return std::cbrt(std::numeric_limits<double>::epsilon()); }

std::array<double, 2> richardson_gradient(const std::function<double(StatePoint)>& q, StatePoint s,
                                          double step_scale) {
  std::array<double, 2> grad{};
  for (int axis = 0; axis < 2; ++axis) {
    const double coord = axis == 0 ? s.x : s.y;
    const double h = step_scale * std::max(1.0, std::abs(coord));
    auto central = [&](double step) {
      StatePoint plus = s;
      StatePoint minus = s;
      (axis == 0 ? plus.x : plus.y) += step;
      (axis == 0 ? minus.x : minus.y) -= step;
      return (q(plus) - q(minus)) / (2 * step);
    };
    grad[axis] = (4 * central(h / 2) - central(h)) / 3;
  }
  return grad;
}

std::array<double, 2> quantity_gradient(const GasModel& model, derivcalc::QuantityCode code,
                                        StatePoint s) {
  const int c = code.value();
  std::function<double(StatePoint)> q;
  switch (c) {
    case 1: return {1.0, 0.0};
    case 2: return {0.0, 1.0};
    case 3: q = [&](StatePoint p) { return model.temperature_entropy(p)[0]; }; break;
    case 4: q = [&](StatePoint p) { return model.temperature_entropy(p)[1]; }; break;
    default: q = [&, c](StatePoint p) { return energy_increment(model, c, s, p); }; break;
  }
  return richardson_gradient(q, s, default_step_scale());
}

double oracle_triple(const GasModel& model, const derivcalc::DerivTriple& t, StatePoint s) {
  const auto ga = quantity_gradient(model, t.a, s);
  const auto gb = quantity_gradient(model, t.b, s);
  const auto gc = quantity_gradient(model, t.c, s);
  const double den = det(gb, gc);
  if (singular(gb, gc))
    throw DegenerateCoordinates("numeric Jacobian of " + derivcalc::to_string(t) + " is singular at " +
                                to_string(s));
  return det(ga, gc) / den;
}

double oracle_second(const GasModel& model, const derivcalc::SecondDerivSpec& spec, StatePoint s) {
  const auto gd = quantity_gradient(model, spec.d, s);
  const auto ge = quantity_gradient(model, spec.e, s);
  const double den = det(gd, ge);
  if (singular(gd, ge))
    throw DegenerateCoordinates("numeric Jacobian of " + derivcalc::to_string(spec) + " is singular at " +
                                to_string(s));
  auto phi = [&](StatePoint p) { return oracle_triple(model, spec.inner, p); };
  const auto gphi = richardson_gradient(phi, s, kOuterStepScale);
  return det(gphi, ge) / den;
}

}  // namespace thermoid::models
