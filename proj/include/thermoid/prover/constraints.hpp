#pragma once

#include "thermoid/polyalg/groebner.hpp"
#include "thermoid/ratfun/rational_function.hpp"

namespace thermoid::prover {

/// The Maxwell constraint M = f1 g2 - f2 g1 - 1 together with its formal x and y
/// prolongations MX, MY, and a reduced grlex Groebner basis of <M, MX, MY>.
class ConstraintSystem {
 public:
  /// Builds the system and checks MX, MY against total_derivative(M).
  ConstraintSystem();

  /// Process-wide instance, built on first use and read-only afterwards.
  static const ConstraintSystem& instance();

  const polyalg::Polynomial& maxwell() const noexcept { return m_; }
  const polyalg::Polynomial& maxwell_x() const noexcept { return mx_; }
  const polyalg::Polynomial& maxwell_y() const noexcept { return my_; }
  const polyalg::GroebnerBasis& basis() const noexcept { return basis_; }

  polyalg::Polynomial reduce(const polyalg::Polynomial& p) const { return basis_.normal_form(p); }
  /// Normal forms of numerator and denominator, renormalized. Throws
  /// DegenerateCoordinates when the denominator lies in the ideal.
  ratfun::RationalFunction reduce(const ratfun::RationalFunction& rf) const;

 private:
  polyalg::Polynomial m_;
  polyalg::Polynomial mx_;
  polyalg::Polynomial my_;
  polyalg::GroebnerBasis basis_;
};

}  // namespace thermoid::prover
