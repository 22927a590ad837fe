#pragma once

// Working representation for reduction loops: terms sorted ASCENDING in the active
// order, so the leading term is back() and can be popped in O(1).

#include <vector>

#include "thermoid/polyalg/polynomial.hpp"

namespace thermoid::polyalg::detail {

using TermList = std::vector<Term>;

inline TermList ascending(const Polynomial& p, const MonomialOrder& order) {
  TermList out = terms_in_order(p, order);
  std::reverse(out.begin(), out.end());
  return out;
}

inline Polynomial to_polynomial(const VariableSet& vars, TermList terms) {
  return Polynomial::from_terms(vars, std::move(terms));
}

/// acc -= c * m * g, where g is ascending and its leading term is dropped (the caller
/// has already cancelled acc's leading term against it).
inline void subtract_multiple_drop_lead(TermList& acc, const TermList& g, const Monomial& m,
                                        const Rational& c, const MonomialOrder& order) {
  acc.pop_back();
  TermList out;
  out.reserve(acc.size() + g.size());
  std::size_t i = 0;
  std::size_t j = 0;
  const std::size_t g_end = g.size() - 1;
  Rational scaled;
  while (i < acc.size() && j < g_end) {
    Monomial gm = g[j].monomial * m;
    int cmp = order.compare(acc[i].monomial, gm);
    if (cmp < 0) {
      out.push_back(std::move(acc[i++]));
    } else if (cmp > 0) {
      out.push_back(Term{std::move(gm), -c * g[j].coefficient});
      ++j;
    } else {
      scaled = acc[i].coefficient - c * g[j].coefficient;
      if (scaled != 0) out.push_back(Term{std::move(gm), scaled});
      ++i;
      ++j;
    }
  }
  for (; i < acc.size(); ++i) out.push_back(std::move(acc[i]));
  for (; j < g_end; ++j) out.push_back(Term{g[j].monomial * m, -c * g[j].coefficient});
  acc = std::move(out);
}

}  // namespace thermoid::polyalg::detail
