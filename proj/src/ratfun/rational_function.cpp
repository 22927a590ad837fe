#include "thermoid/ratfun/rational_function.hpp"

#include <algorithm>

#include "thermoid/error.hpp"
#include "thermoid/ratfun/poly_gcd.hpp"

namespace thermoid::ratfun {

using polyalg::Polynomial;
using polyalg::Rational;
using polyalg::Term;

RationalFunction::RationalFunction() : num_(primitive_variables()), den_(ratfun::constant(1)) {}

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(ratfun::constant(1)) {
  if (!(num_.vars() == primitive_variables()))
    throw UsageError("rational functions live over the primitive alphabet");
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (!(num_.vars() == primitive_variables()) || !(den_.vars() == primitive_variables()))
    throw UsageError("rational functions live over the primitive alphabet");
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = ratfun::constant(1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  Rational s = primitive_scale(den_, kCanonicalOrder);
  if (s != 1) {
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator, Normalized)
    : num_(std::move(numerator)), den_(std::move(denominator)) {}

RationalFunction RationalFunction::constant(const Rational& value) {
  return RationalFunction(ratfun::constant(value));
}

RationalFunction RationalFunction::symbol(Primitive p) { return RationalFunction(ratfun::symbol(p)); }

int RationalFunction::max_order() const {
  int order = -1;
  for (const Polynomial* p : {&num_, &den_})
    for (const Term& t : p->terms())
      for (std::size_t i = 0; i < kPrimitiveCount; ++i)
        if (t.monomial[i] != 0) order = std::max(order, differential_order(static_cast<Primitive>(i)));
  return order;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Normalized{}); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  // With g = gcd(a.den, b.den), any factor shared by the new numerator and
  // denominator already divides g, so only that small gcd is needed.
  const Polynomial g = gcd(a.den_, b.den_);
  const Polynomial ad = *divide_exact(a.den_, g);
  const Polynomial bd = *divide_exact(b.den_, g);
  Polynomial num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return RationalFunction();
  Polynomial den = ad * b.den_;
  if (!g.is_constant()) {
    const Polynomial h = gcd(num, g);
    if (!h.is_constant()) {
      num = *divide_exact(num, h);
      den = *divide_exact(den, h);
    }
  }
  const Rational s = primitive_scale(den, kCanonicalOrder);
  return RationalFunction(num.scaled(s), den.scaled(s), RationalFunction::Normalized{});
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  // Cancel across before multiplying; both operands are already in lowest terms.
  Polynomial g1 = gcd(a.num_, b.den_);
  Polynomial g2 = gcd(b.num_, a.den_);
  Polynomial an = *divide_exact(a.num_, g1);
  Polynomial bd = *divide_exact(b.den_, g1);
  Polynomial bn = *divide_exact(b.num_, g2);
  Polynomial ad = *divide_exact(a.den_, g2);
  Polynomial num = an * bn;
  Polynomial den = ad * bd;
  Rational s = primitive_scale(den, kCanonicalOrder);
  return RationalFunction(num.scaled(s), den.scaled(s), RationalFunction::Normalized{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
  return a * RationalFunction(b.den_, b.num_);
}

RationalFunction RationalFunction::pow(unsigned exponent) const {
  RationalFunction out = constant(1);
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

std::string RationalFunction::to_string() const {
  std::string out = num_.to_string(kCanonicalOrder);
  if (den_ != ratfun::constant(1)) out += " / " + den_.to_string(kCanonicalOrder);
  return out;
}

bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
  return (a.numerator() * b.denominator() - b.numerator() * a.denominator()).is_zero();
}

Polynomial total_derivative(const Polynomial& p, Axis axis) {
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    for (std::size_t i = 0; i < kPrimitiveCount; ++i) {
      auto e = t.monomial[i];
      if (e == 0) continue;
      Polynomial d = derivation_table(static_cast<Primitive>(i), axis);
      if (d.is_zero()) continue;
      Polynomial piece = d.times_term(t.monomial.with_exponent(i, e - 1), t.coefficient * e);
      for (const Term& pt : piece.terms()) out.push_back(pt);
    }
  }
  return Polynomial::from_terms(p.vars(), std::move(out));
}

RationalFunction total_derivative(const RationalFunction& rf, Axis axis) {
  const Polynomial& n = rf.numerator();
  const Polynomial& d = rf.denominator();
  if (d.is_constant()) return RationalFunction(total_derivative(n, axis), d);
  Polynomial dn = total_derivative(n, axis);
  Polynomial dd = total_derivative(d, axis);
  return RationalFunction(dn * d - n * dd, d * d);
}

}  // namespace thermoid::ratfun
