#include "thermoid/prover/constraints.hpp"

#include "thermoid/error.hpp"

namespace thermoid::prover {

using polyalg::Polynomial;
using ratfun::Primitive;

namespace {

Polynomial s(Primitive p) { return ratfun::symbol(p); }

Polynomial build_m() { return s(Primitive::F1) * s(Primitive::G2) - s(Primitive::F2) * s(Primitive::G1) - ratfun::constant(1); }

polyalg::GroebnerBasis build_basis(const Polynomial& m, const Polynomial& mx, const Polynomial& my) {
  const std::vector<Polynomial> gens{m, mx, my};
  return polyalg::buchberger(gens, ratfun::kCanonicalOrder);
}

}  // namespace

ConstraintSystem::ConstraintSystem()
    : m_(build_m()),
      mx_(s(Primitive::F11) * s(Primitive::G2) + s(Primitive::F1) * s(Primitive::G12) -
          s(Primitive::F12) * s(Primitive::G1) - s(Primitive::F2) * s(Primitive::G11)),
      my_(s(Primitive::F12) * s(Primitive::G2) + s(Primitive::F1) * s(Primitive::G22) -
          s(Primitive::F22) * s(Primitive::G1) - s(Primitive::F2) * s(Primitive::G12)),
      basis_(build_basis(m_, mx_, my_)) {
  if (ratfun::total_derivative(m_, ratfun::Axis::x) != mx_ || ratfun::total_derivative(m_, ratfun::Axis::y) != my_)
    throw Error("internal: constraint prolongations disagree with the derivation table");
}

const ConstraintSystem& ConstraintSystem::instance() {
  static const ConstraintSystem system;
  return system;
}

ratfun::RationalFunction ConstraintSystem::reduce(const ratfun::RationalFunction& rf) const {
  Polynomial den = reduce(rf.denominator());
  if (den.is_zero()) throw DegenerateCoordinates("denominator " + rf.denominator().to_string(ratfun::kCanonicalOrder) +
                                                 " vanishes on the constraint ideal");
  return {reduce(rf.numerator()), std::move(den)};
}

}  // namespace thermoid::prover
