#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "thermoid/ratfun/alphabet.hpp"

namespace thermoid::models {

/// (x, y) = (pressure-like, volume-like) coordinates.
struct StatePoint {
  double x = 0;
  double y = 0;

  friend bool operator==(const StatePoint&, const StatePoint&) = default;
};

std::string to_string(StatePoint s);

/// Numeric values of all 14 primitive symbols at one state.
struct PrimitiveValuation {
  std::array<double, ratfun::kPrimitiveCount> values{};

  double operator[](ratfun::Primitive p) const { return values[static_cast<std::size_t>(p)]; }
  double& operator[](ratfun::Primitive p) { return values[static_cast<std::size_t>(p)]; }

  /// f1*g2 - f2*g1.
  double jacobian() const;
};

struct IdealGasParams {
  double gamma;
};

struct VanDerWaalsParams {
  double a;
  double b;
  double gamma;
};

/// gamma(w) = sum_k gamma_coeffs[k] * w^k with w = (x + a/y^2)(y - b).
struct SynthesisParams {
  std::vector<double> gamma_coeffs;
  double a;
  double b;
};

/// A gas with closed-form temperature f(x,y) and entropy g(x,y) satisfying
/// f1*g2 - f2*g1 = 1. Every model fixes its own additive/normalization gauge,
/// reported by gauge().
class GasModel {
 public:
  using Params = std::variant<IdealGasParams, VanDerWaalsParams, SynthesisParams>;

  /// u = x y, v = (ln x + gamma ln y)/(gamma - 1). Throws UsageError unless gamma > 1.
  static GasModel ideal_gas(double gamma);
  /// With P = x + a/y^2, Q = y - b: u = P Q, v = (ln P + gamma ln Q)/(gamma - 1).
  static GasModel van_der_waals(double a, double b, double gamma);
  /// With w = P Q: u = phi(w), phi' = 1/(gamma(w) - 1), phi(1) = 0, and
  /// v = (gamma(w) - 1) ln Q. a = b = 0 is the Feynman gas. Throws DomainError if
  /// gamma(1) <= 1 and UsageError on negative a or b or an empty coefficient list.
  static GasModel synthesis(std::vector<double> gamma_coeffs, double a, double b);

  const std::string& name() const noexcept { return name_; }
  std::string_view gauge() const noexcept;
  const Params& params() const noexcept { return params_; }

  bool in_domain(StatePoint s) const;
  /// All primitives with analytic partials. Throws DomainError outside the domain.
  PrimitiveValuation valuation(StatePoint s) const;
  /// Temperature f and entropy g only; no derivative information is used.
  std::array<double, 2> temperature_entropy(StatePoint s) const;

  /// 5 x 5 grid inside the domain used by the J-invariant check.
  std::vector<StatePoint> default_grid() const;

 private:
  GasModel(std::string name, Params params) : name_(std::move(name)), params_(std::move(params)) {}
  void require_domain(StatePoint s) const;

  std::string name_;
  Params params_;
};

struct JacobianCheck {
  double max_deviation = 0;
  StatePoint worst;
  std::size_t states = 0;
  bool passed = true;
};

/// max |f1 g2 - f2 g1 - 1| over the states; passes iff that is <= tolerance.
JacobianCheck check_jacobian(const GasModel& model, std::span<const StatePoint> states,
                             double tolerance);

}  // namespace thermoid::models
