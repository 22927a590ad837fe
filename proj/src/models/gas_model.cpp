#include "thermoid/models/gas_model.hpp"

#include <cmath>
#include <sstream>

#include "thermoid/error.hpp"
#include "thermoid/models/quadrature.hpp"
#include "thermoid/models/state_grid.hpp"

namespace thermoid::models {

using ratfun::Primitive;

namespace {

constexpr double kQuadratureTolerance = 1e-10;
constexpr double kSynthesisJacobianTolerance = 1e-6;

std::string format_params(std::initializer_list<std::pair<const char*, double>> params) {
  std::ostringstream os;
  os.precision(6);
  bool first = true;
  for (const auto& [key, value] : params) {
    os << (first ? "" : ",") << key << "=" << value;
    first = false;
  }
  return os.str();
}

// (x + a/y^2) and its y-derivatives, (y - b).
struct Shifted {
  double p, p_y, p_yy, q;
};

Shifted shifted(double a, double b, StatePoint s) {
  return Shifted{s.x + a / (s.y * s.y), -2 * a / (s.y * s.y * s.y), 6 * a / (s.y * s.y * s.y * s.y),
                 s.y - b};
}

struct Polynomial1 {
  std::span<const double> c;
  double value(double w) const {
    double v = 0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * w + c[k];
    return v;
  }
  double first(double w) const {
    double v = 0;
    for (std::size_t k = c.size(); k-- > 1;) v = v * w + static_cast<double>(k) * c[k];
    return v;
  }
  double second(double w) const {
    double v = 0;
    for (std::size_t k = c.size(); k-- > 2;) v = v * w + static_cast<double>(k * (k - 1)) * c[k];
    return v;
  }
};

PrimitiveValuation ideal_valuation(const IdealGasParams& m, StatePoint s) {
  const double k = 1 / (m.gamma - 1);
  PrimitiveValuation v;
  v[Primitive::X] = s.x;
  v[Primitive::Y] = s.y;
  v[Primitive::F] = s.x * s.y;
  v[Primitive::G] = k * (std::log(s.x) + m.gamma * std::log(s.y));
  v[Primitive::F1] = s.y;
  v[Primitive::F2] = s.x;
  v[Primitive::G1] = k / s.x;
  v[Primitive::G2] = k * m.gamma / s.y;
  v[Primitive::F11] = 0;
  v[Primitive::F12] = 1;
  v[Primitive::F22] = 0;
  v[Primitive::G11] = -k / (s.x * s.x);
  v[Primitive::G12] = 0;
  v[Primitive::G22] = -k * m.gamma / (s.y * s.y);
  return v;
}

PrimitiveValuation vdw_valuation(const VanDerWaalsParams& m, StatePoint s) {
  const double k = 1 / (m.gamma - 1);
  const Shifted w = shifted(m.a, m.b, s);
  PrimitiveValuation v;
  v[Primitive::X] = s.x;
  v[Primitive::Y] = s.y;
  v[Primitive::F] = w.p * w.q;
  v[Primitive::G] = k * (std::log(w.p) + m.gamma * std::log(w.q));
  v[Primitive::F1] = w.q;
  v[Primitive::F2] = w.p_y * w.q + w.p;
  v[Primitive::G1] = k / w.p;
  v[Primitive::G2] = k * (w.p_y / w.p + m.gamma / w.q);
  v[Primitive::F11] = 0;
  v[Primitive::F12] = 1;
  v[Primitive::F22] = w.p_yy * w.q + 2 * w.p_y;
  v[Primitive::G11] = -k / (w.p * w.p);
  v[Primitive::G12] = -k * w.p_y / (w.p * w.p);
  v[Primitive::G22] = k * (w.p_yy / w.p - w.p_y * w.p_y / (w.p * w.p) - m.gamma / (w.q * w.q));
  return v;
}

double synthesis_phi(const SynthesisParams& m, double w) {
  Polynomial1 gamma{m.gamma_coeffs};
  auto integrand = [&](double t) {
    double g = gamma.value(t);
    if (!(g > 1)) throw DomainError("adiabatic exponent gamma(w) <= 1 at w = " + std::to_string(t));
    return 1 / (g - 1);
  };
  return adaptive_simpson(integrand, 1.0, w, kQuadratureTolerance);
}

PrimitiveValuation synthesis_valuation(const SynthesisParams& m, StatePoint s) {
  const Shifted sh = shifted(m.a, m.b, s);
  Polynomial1 gamma{m.gamma_coeffs};
  // w = P Q and its partials.
  const double w = sh.p * sh.q;
  const double wx = sh.q;
  const double wy = sh.p_y * sh.q + sh.p;
  const double wxx = 0;
  const double wxy = 1;
  const double wyy = sh.p_yy * sh.q + 2 * sh.p_y;
  const double h = gamma.value(w) - 1;  // gamma(w) - 1
  if (!(h > 0)) throw DomainError("adiabatic exponent gamma(w) <= 1 at w = " + std::to_string(w));
  const double h1 = gamma.first(w);
  const double h2 = gamma.second(w);
  const double phi1 = 1 / h;
  const double phi2 = -h1 / (h * h);
  const double ln_q = std::log(sh.q);
  const double lq_y = 1 / sh.q;
  const double lq_yy = -1 / (sh.q * sh.q);

  PrimitiveValuation v;
  v[Primitive::X] = s.x;
  v[Primitive::Y] = s.y;
  v[Primitive::F] = synthesis_phi(m, w);
  v[Primitive::G] = h * ln_q;
  v[Primitive::F1] = phi1 * wx;
  v[Primitive::F2] = phi1 * wy;
  v[Primitive::F11] = phi2 * wx * wx + phi1 * wxx;
  v[Primitive::F12] = phi2 * wx * wy + phi1 * wxy;
  v[Primitive::F22] = phi2 * wy * wy + phi1 * wyy;
  v[Primitive::G1] = h1 * wx * ln_q;
  v[Primitive::G2] = h1 * wy * ln_q + h * lq_y;
  v[Primitive::G11] = h2 * wx * wx * ln_q + h1 * wxx * ln_q;
  v[Primitive::G12] = h2 * wx * wy * ln_q + h1 * wxy * ln_q + h1 * wx * lq_y;
  v[Primitive::G22] = h2 * wy * wy * ln_q + h1 * wyy * ln_q + 2 * h1 * wy * lq_y + h * lq_yy;
  if (std::abs(v.jacobian() - 1) > kSynthesisJacobianTolerance)
    throw DomainError("synthesis model violates f1 g2 - f2 g1 = 1 at " + to_string(s));
  return v;
}

}  // namespace

std::string to_string(StatePoint s) {
  std::ostringstream os;
  os.precision(10);
  os << "(" << s.x << "," << s.y << ")";
  return os.str();
}

double PrimitiveValuation::jacobian() const {
  const auto& v = *this;
  return v[Primitive::F1] * v[Primitive::G2] - v[Primitive::F2] * v[Primitive::G1];
}

GasModel GasModel::ideal_gas(double gamma) {
  if (!(gamma > 1)) throw UsageError("ideal gas needs gamma > 1");
  return GasModel("ideal(" + format_params({{"gamma", gamma}}) + ")", IdealGasParams{gamma});
}

GasModel GasModel::van_der_waals(double a, double b, double gamma) {
  if (!(gamma > 1)) throw UsageError("van der Waals gas needs gamma > 1");
  if (!(a >= 0) || !(b >= 0)) throw UsageError("van der Waals gas needs a >= 0 and b >= 0");
  return GasModel("vdw(" + format_params({{"a", a}, {"b", b}, {"gamma", gamma}}) + ")",
                  VanDerWaalsParams{a, b, gamma});
}

GasModel GasModel::synthesis(std::vector<double> gamma_coeffs, double a, double b) {
  if (gamma_coeffs.empty()) throw UsageError("synthesis model needs gamma(w) coefficients");
  if (!(a >= 0) || !(b >= 0)) throw UsageError("synthesis model needs a >= 0 and b >= 0");
  if (!(Polynomial1{gamma_coeffs}.value(1.0) > 1))
    throw DomainError("synthesis model needs gamma(w) > 1; gamma(1) <= 1");
  std::ostringstream coeffs;
  coeffs.precision(6);
  for (std::size_t i = 0; i < gamma_coeffs.size(); ++i) coeffs << (i ? ";" : "") << gamma_coeffs[i];
  return GasModel("synthesis(gamma=[" + coeffs.str() + "]," + format_params({{"a", a}, {"b", b}}) + ")",
                  SynthesisParams{std::move(gamma_coeffs), a, b});
}

std::string_view GasModel::gauge() const noexcept {
  switch (params_.index()) {
    case 0: return "u = x*y; v = (ln x + gamma ln y)/(gamma-1)";
    case 1: return "u = w; v = (ln P + gamma ln Q)/(gamma-1); P = x + a/y^2, Q = y - b, w = P*Q";
    default: return "u = phi(w), phi(1) = 0; v = (gamma(w)-1) ln Q; P = x + a/y^2, Q = y - b, w = P*Q";
  }
}

bool GasModel::in_domain(StatePoint s) const {
  if (!std::isfinite(s.x) || !std::isfinite(s.y)) return false;
  return std::visit(
      [&](const auto& m) -> bool {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, IdealGasParams>) {
          return s.x > 0 && s.y > 0;
        } else {
          if (!(s.y > 0)) return false;
          Shifted w = shifted(m.a, m.b, s);
          if (!(w.p > 0 && w.q > 0)) return false;
          if constexpr (std::is_same_v<T, SynthesisParams>)
            return Polynomial1{m.gamma_coeffs}.value(w.p * w.q) > 1;
          return true;
        }
      },
      params_);
}

void GasModel::require_domain(StatePoint s) const {
  if (!in_domain(s)) throw DomainError("state " + to_string(s) + " outside the domain of " + name_);
}

PrimitiveValuation GasModel::valuation(StatePoint s) const {
  require_domain(s);
  return std::visit(
      [&](const auto& m) -> PrimitiveValuation {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, IdealGasParams>) return ideal_valuation(m, s);
        else if constexpr (std::is_same_v<T, VanDerWaalsParams>) return vdw_valuation(m, s);
        else return synthesis_valuation(m, s);
      },
      params_);
}

std::array<double, 2> GasModel::temperature_entropy(StatePoint s) const {
  require_domain(s);
  return std::visit(
      [&](const auto& m) -> std::array<double, 2> {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, IdealGasParams>) {
          return {s.x * s.y, (std::log(s.x) + m.gamma * std::log(s.y)) / (m.gamma - 1)};
        } else if constexpr (std::is_same_v<T, VanDerWaalsParams>) {
          Shifted w = shifted(m.a, m.b, s);
          return {w.p * w.q, (std::log(w.p) + m.gamma * std::log(w.q)) / (m.gamma - 1)};
        } else {
          Shifted sh = shifted(m.a, m.b, s);
          double w = sh.p * sh.q;
          return {synthesis_phi(m, w), (Polynomial1{m.gamma_coeffs}.value(w) - 1) * std::log(sh.q)};
        }
      },
      params_);
}

std::vector<StatePoint> GasModel::default_grid() const {
  return std::visit(
      [&](const auto& m) -> std::vector<StatePoint> {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, IdealGasParams>) {
          return state_grid(1, 3, 5, 1, 3, 5);
        } else {
          double y0 = std::max(1.0, m.b + 0.5);
          if constexpr (std::is_same_v<T, VanDerWaalsParams>) return state_grid(1.5, 4, 5, y0, y0 + 2, 5);
          return state_grid(1, 3, 5, y0, y0 + 2, 5);
        }
      },
      params_);
}

JacobianCheck check_jacobian(const GasModel& model, std::span<const StatePoint> states,
                             double tolerance) {
  JacobianCheck check;
  for (const StatePoint& s : states) {
    double dev = std::abs(model.valuation(s).jacobian() - 1);
    if (check.states == 0 || dev > check.max_deviation) {
      check.max_deviation = dev;
      check.worst = s;
    }
    ++check.states;
  }
  check.passed = check.max_deviation <= tolerance;
  return check;
}

}  // namespace thermoid::models
