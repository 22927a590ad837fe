#include "thermoid/polyalg/division.hpp"

#include <algorithm>

#include "term_list.hpp"
#include "thermoid/error.hpp"

namespace thermoid::polyalg {
namespace {

struct Divisor {
  detail::TermList terms;
  const Term* lead;
};

std::vector<Divisor> prepare(std::span<const Polynomial> divisors, const Polynomial& p,
                             const MonomialOrder& order) {
  std::vector<Divisor> out;
  out.reserve(divisors.size());
  for (const Polynomial& d : divisors) {
    if (!(d.vars() == p.vars())) throw UsageError("divisor over a different variable set");
    if (d.is_zero()) throw UsageError("division by the zero polynomial");
    out.push_back(Divisor{detail::ascending(d, order), nullptr});
  }
  for (Divisor& d : out) d.lead = &d.terms.back();
  return out;
}

}  // namespace

DivisionResult divide(const Polynomial& p, std::span<const Polynomial> divisors,
                      const MonomialOrder& order) {
  std::vector<Divisor> divs = prepare(divisors, p, order);
  std::vector<std::vector<Term>> quotients(divs.size());
  detail::TermList work = detail::ascending(p, order);
  std::vector<Term> remainder;

  while (!work.empty()) {
    const Term& lt = work.back();
    auto hit = std::find_if(divs.begin(), divs.end(),
                            [&](const Divisor& d) { return d.lead->monomial.divides(lt.monomial); });
    if (hit == divs.end()) {
      remainder.push_back(std::move(work.back()));
      work.pop_back();
      continue;
    }
    Monomial m = lt.monomial / hit->lead->monomial;
    Rational c = lt.coefficient / hit->lead->coefficient;
    quotients[static_cast<std::size_t>(hit - divs.begin())].push_back(Term{m, c});
    detail::subtract_multiple_drop_lead(work, hit->terms, m, c, order);
  }

  DivisionResult result{{}, Polynomial::from_terms(p.vars(), std::move(remainder))};
  result.quotients.reserve(quotients.size());
  for (auto& q : quotients) result.quotients.push_back(Polynomial::from_terms(p.vars(), std::move(q)));
  return result;
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors,
                       const MonomialOrder& order) {
  if (divisors.empty() || p.is_zero()) return p;
  std::vector<Divisor> divs = prepare(divisors, p, order);
  detail::TermList work = detail::ascending(p, order);
  std::vector<Term> remainder;
  while (!work.empty()) {
    const Term& lt = work.back();
    auto hit = std::find_if(divs.begin(), divs.end(),
                            [&](const Divisor& d) { return d.lead->monomial.divides(lt.monomial); });
    if (hit == divs.end()) {
      remainder.push_back(std::move(work.back()));
      work.pop_back();
      continue;
    }
    Monomial m = lt.monomial / hit->lead->monomial;
    Rational c = lt.coefficient / hit->lead->coefficient;
    detail::subtract_multiple_drop_lead(work, hit->terms, m, c, order);
  }
  return Polynomial::from_terms(p.vars(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& p, const Polynomial& q, const MonomialOrder& order) {
  if (p.is_zero() || q.is_zero()) throw UsageError("S-polynomial of the zero polynomial");
  const Term& lp = p.leading_term(order);
  const Term& lq = q.leading_term(order);
  Monomial l = lcm(lp.monomial, lq.monomial);
  return p.times_term(l / lp.monomial, 1 / lp.coefficient) -
         q.times_term(l / lq.monomial, 1 / lq.coefficient);
}

}  // namespace thermoid::polyalg
