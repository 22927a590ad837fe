#include "thermoid/derivcalc/calculus.hpp"

#include "thermoid/error.hpp"

namespace thermoid::derivcalc {

using ratfun::Axis;
using ratfun::Primitive;
using ratfun::RationalFunction;

namespace {

RationalFunction sym(Primitive p) { return RationalFunction::symbol(p); }
RationalFunction num(long v) { return RationalFunction::constant(v); }

}  // namespace

RationalFunction base_partial(QuantityCode a, Axis axis) {
  const bool along_x = axis == Axis::x;
  const auto x = sym(Primitive::X);
  const auto y = sym(Primitive::Y);
  const auto f = sym(Primitive::F);
  const auto g = sym(Primitive::G);
  const auto fi = sym(along_x ? Primitive::F1 : Primitive::F2);
  const auto gi = sym(along_x ? Primitive::G1 : Primitive::G2);
  switch (a.value()) {
    case 1: return num(along_x ? 1 : 0);
    case 2: return num(along_x ? 0 : 1);
    case 3: return fi;
    case 4: return gi;
    // dE13 = -v du + y dx
    case 5: return along_x ? y - g * fi : -(g * fi);
    // dE14 = u dv + y dx
    case 6: return along_x ? y + f * gi : f * gi;
    // dE23 = -v du - x dy
    case 7: return along_x ? -(g * fi) : -x - g * fi;
    // dE24 = u dv - x dy
    case 8: return along_x ? f * gi : -x + f * gi;
  }
  throw UsageError("quantity code outside 1..8");
}

RationalFunction base_determinant(QuantityCode a, QuantityCode b) {
  return base_partial(a, Axis::x) * base_partial(b, Axis::y) -
         base_partial(a, Axis::y) * base_partial(b, Axis::x);
}

RationalFunction jacobian(const JacobianSpec& spec) {
  if (spec.c == spec.d) throw UsageError("coordinates must be distinct in [a,b;c,d]");
  RationalFunction den = base_determinant(spec.c, spec.d);
  if (den.is_zero())
    throw DegenerateCoordinates("quantities " + std::to_string(spec.c.value()) + " and " +
                                std::to_string(spec.d.value()) + " do not form coordinates");
  if (spec.a == spec.b) return RationalFunction();
  return base_determinant(spec.a, spec.b) / den;
}

RationalFunction deriv_triple(const DerivTriple& t) {
  return jacobian(JacobianSpec::make(t.a.value(), t.c.value(), t.b.value(), t.c.value()));
}

RationalFunction second_deriv(const SecondDerivSpec& s) {
  RationalFunction phi = deriv_triple(s.inner);
  RationalFunction den = base_determinant(s.d, s.e);
  if (den.is_zero())
    throw DegenerateCoordinates("quantities " + std::to_string(s.d.value()) + " and " +
                                std::to_string(s.e.value()) + " do not form coordinates");
  RationalFunction numer = ratfun::total_derivative(phi, Axis::x) * base_partial(s.e, Axis::y) -
                           ratfun::total_derivative(phi, Axis::y) * base_partial(s.e, Axis::x);
  return numer / den;
}

}  // namespace thermoid::derivcalc
