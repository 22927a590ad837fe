#include "thermoid/polyalg/polynomial.hpp"

#include <algorithm>

#include "thermoid/error.hpp"

namespace thermoid::polyalg {
namespace {

constexpr MonomialOrder kStorageOrder = MonomialOrder::lex();

bool storage_before(const Term& a, const Term& b) {
  return kStorageOrder.compare(a.monomial, b.monomial) > 0;
}

// Merges two storage-sorted term lists, negating the second when `subtract`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    int c = kStorageOrder.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].monomial, -b[j].coefficient} : b[j]);
      ++j;
    } else {
      Rational sum = a[i].coefficient;
      if (subtract) sum -= b[j].coefficient; else sum += b[j].coefficient;
      if (sum != 0) out.push_back(Term{a[i].monomial, std::move(sum)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j)
    out.push_back(subtract ? Term{b[j].monomial, -b[j].coefficient} : b[j]);
  return out;
}

}  // namespace

Polynomial::Polynomial(VariableSet vars) : vars_(std::move(vars)) {}

Polynomial::Polynomial(VariableSet vars, std::vector<Term> sorted_terms)
    : vars_(std::move(vars)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(VariableSet vars, const Rational& value) {
  if (value == 0) return Polynomial(std::move(vars));
  Monomial one(vars.size());
  Rational c = value;
  c.canonicalize();
  return Polynomial(std::move(vars), {Term{std::move(one), std::move(c)}});
}

Polynomial Polynomial::variable(VariableSet vars, std::size_t index) {
  if (index >= vars.size()) throw UsageError("variable index out of range");
  Monomial m = Monomial::variable(vars.size(), index);
  return Polynomial(std::move(vars), {Term{std::move(m), Rational(1)}});
}

Polynomial Polynomial::variable(VariableSet vars, std::string_view name) {
  auto index = vars.index_of(name);
  if (!index) throw UsageError("unknown variable '" + std::string(name) + "'");
  return variable(std::move(vars), *index);
}

Polynomial Polynomial::monomial(VariableSet vars, Monomial m, Rational coefficient) {
  if (m.size() != vars.size()) throw UsageError("monomial arity does not match variable set");
  coefficient.canonicalize();
  if (coefficient == 0) return Polynomial(std::move(vars));
  return Polynomial(std::move(vars), {Term{std::move(m), std::move(coefficient)}});
}

Polynomial Polynomial::from_terms(VariableSet vars, std::vector<Term> terms) {
  for (Term& t : terms) {
    if (t.monomial.size() != vars.size()) throw UsageError("monomial arity does not match variable set");
    t.coefficient.canonicalize();
  }
  std::sort(terms.begin(), terms.end(), storage_before);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
      if (out.back().coefficient == 0) out.pop_back();
    } else if (t.coefficient != 0) {
      out.push_back(std::move(t));
    }
  }
  return Polynomial(std::move(vars), std::move(out));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational Polynomial::constant_term() const {
  // The unit monomial is the lex-smallest, so it sits last.
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return 0;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, storage_before);
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

Monomial::Exponent Polynomial::total_degree() const noexcept {
  Monomial::Exponent d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Monomial::Exponent Polynomial::degree_in(std::size_t index) const noexcept {
  Monomial::Exponent d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial[index]);
  return d;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw UsageError("leading term of the zero polynomial");
  if (order == kStorageOrder) return terms_.front();
  auto it = std::max_element(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return order.less(a.monomial, b.monomial);
  });
  return *it;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  return scaled(1 / leading_term(order).coefficient);
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor == 0) return Polynomial(vars_);
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coefficient *= factor;
  return Polynomial(vars_, std::move(out));
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& coefficient) const {
  if (coefficient == 0) return Polynomial(vars_);
  // Multiplying by a monomial preserves any admissible order, so storage order survives.
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(Term{t.monomial * m, t.coefficient * coefficient});
  return Polynomial(vars_, std::move(out));
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

void Polynomial::require_same_vars(const Polynomial& other) const {
  if (!(vars_ == other.vars_)) throw UsageError("polynomials over different variable sets");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_vars(rhs);
  terms_ = merge(terms_, rhs.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_vars(rhs);
  terms_ = merge(terms_, rhs.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.require_same_vars(rhs);
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial(lhs.vars_);
  if (rhs.terms_.size() == 1) return lhs.times_term(rhs.terms_[0].monomial, rhs.terms_[0].coefficient);
  if (lhs.terms_.size() == 1) return rhs.times_term(lhs.terms_[0].monomial, lhs.terms_[0].coefficient);
  std::vector<Term> products;
  products.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (const Term& a : lhs.terms_)
    for (const Term& b : rhs.terms_)
      products.push_back(Term{a.monomial * b.monomial, a.coefficient * b.coefficient});
  return Polynomial::from_terms(lhs.vars_, std::move(products));
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  return lhs.terms_ == rhs.terms_ && lhs.vars_ == rhs.vars_;
}

std::vector<Term> terms_in_order(const Polynomial& p, const MonomialOrder& order) {
  std::vector<Term> out(p.terms().begin(), p.terms().end());
  if (order != MonomialOrder::lex())
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
      return order.compare(a.monomial, b.monomial) > 0;
    });
  return out;
}

std::string monomial_to_string(const Monomial& m, const VariableSet& vars) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string Polynomial::to_string(const MonomialOrder& order) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_in_order(*this, order)) {
    bool negative = t.coefficient < 0;
    Rational magnitude = abs(t.coefficient);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + '*';
      out += monomial_to_string(t.monomial, vars_);
    }
  }
  return out;
}

}  // namespace thermoid::polyalg
