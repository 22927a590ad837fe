#include "thermoid/polyalg/groebner.hpp"

#include <algorithm>

#include "thermoid/error.hpp"
#include "thermoid/polyalg/division.hpp"

namespace thermoid::polyalg {
namespace {

// Completion runs fraction-free: every basis element is a primitive integer
// polynomial with positive leading coefficient, kept ASCENDING in the active order
// so the leading term is back().
struct ZTerm {
  Monomial monomial;
  Integer coefficient;
};
using ZList = std::vector<ZTerm>;

// Steps between content removals while reducing.
constexpr int kContentInterval = 8;

void divide_content(ZList& p, ZList* companion = nullptr) {
  Integer g = 0;
  for (const ZTerm& t : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_mpz_t());
  if (companion)
    for (const ZTerm& t : *companion) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (ZTerm& t : p) mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), g.get_mpz_t());
  if (companion)
    for (ZTerm& t : *companion) mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), g.get_mpz_t());
}

void make_primitive(ZList& p) {
  if (p.empty()) return;
  divide_content(p);
  if (p.back().coefficient < 0)
    for (ZTerm& t : p) t.coefficient = -t.coefficient;
}

ZList to_integer(const Polynomial& p, const MonomialOrder& order) {
  Integer den = 1;
  for (const Term& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
  std::vector<Term> sorted = terms_in_order(p, order);
  ZList out;
  out.reserve(sorted.size());
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    Integer c = den / it->coefficient.get_den();
    c *= it->coefficient.get_num();
    out.push_back(ZTerm{it->monomial, std::move(c)});
  }
  make_primitive(out);
  return out;
}

// Monic rational polynomial from a nonzero integer list.
Polynomial to_monic(const VariableSet& vars, const ZList& p) {
  const Integer& lead = p.back().coefficient;
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const ZTerm& t : p) {
    Rational c(t.coefficient, lead);
    c.canonicalize();
    terms.push_back(Term{t.monomial, std::move(c)});
  }
  return Polynomial::from_terms(vars, std::move(terms));
}

// acc := acc - c * m * g, where acc's leading term has already been cancelled
// against g's and is dropped.
void subtract_multiple_drop_lead(ZList& acc, const ZList& g, const Monomial& m, const Integer& c,
                                 const MonomialOrder& order) {
  acc.pop_back();
  ZList out;
  out.reserve(acc.size() + g.size());
  std::size_t i = 0;
  std::size_t j = 0;
  const std::size_t g_end = g.size() - 1;
  Integer prod;
  while (i < acc.size() && j < g_end) {
    Monomial gm = g[j].monomial * m;
    const int cmp = order.compare(acc[i].monomial, gm);
    if (cmp < 0) {
      out.push_back(std::move(acc[i++]));
    } else if (cmp > 0) {
      prod = c * g[j].coefficient;
      out.push_back(ZTerm{std::move(gm), -prod});
      ++j;
    } else {
      prod = c * g[j].coefficient;
      acc[i].coefficient -= prod;
      if (acc[i].coefficient != 0) out.push_back(ZTerm{std::move(gm), std::move(acc[i].coefficient)});
      ++i;
      ++j;
    }
  }
  for (; i < acc.size(); ++i) out.push_back(std::move(acc[i]));
  for (; j < g_end; ++j) {
    prod = c * g[j].coefficient;
    out.push_back(ZTerm{g[j].monomial * m, -prod});
  }
  acc = std::move(out);
}

// Full fraction-free reduction of `work` modulo the live basis elements. The
// result is a nonzero integer multiple of the rational normal form, made primitive.
ZList reduce(ZList work, const std::vector<ZList>& basis, const std::vector<bool>& live,
             const MonomialOrder& order) {
  ZList remainder;  // collected in descending order
  int steps = 0;
  Integer g;
  while (!work.empty()) {
    const ZTerm& lt = work.back();
    std::size_t k = 0;
    for (; k < basis.size(); ++k)
      if (live[k] && basis[k].back().monomial.divides(lt.monomial)) break;
    if (k == basis.size()) {
      remainder.push_back(std::move(work.back()));
      work.pop_back();
      continue;
    }
    const ZTerm& lead = basis[k].back();
    mpz_gcd(g.get_mpz_t(), lt.coefficient.get_mpz_t(), lead.coefficient.get_mpz_t());
    const Integer scale_work = lead.coefficient / g;
    const Integer scale_g = lt.coefficient / g;
    const Monomial m = lt.monomial / lead.monomial;
    if (scale_work != 1) {
      for (ZTerm& t : work) t.coefficient *= scale_work;
      for (ZTerm& t : remainder) t.coefficient *= scale_work;
    }
    subtract_multiple_drop_lead(work, basis[k], m, scale_g, order);
    if (++steps % kContentInterval == 0) divide_content(work, &remainder);
  }
  std::reverse(remainder.begin(), remainder.end());
  make_primitive(remainder);
  return remainder;
}

ZList s_polynomial(const ZList& a, const ZList& b, const Monomial& l, const MonomialOrder& order) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.back().coefficient.get_mpz_t(), b.back().coefficient.get_mpz_t());
  const Integer ca = b.back().coefficient / g;
  const Integer cb = a.back().coefficient / g;
  const Monomial ma = l / a.back().monomial;
  ZList out;
  out.reserve(a.size() + b.size());
  for (const ZTerm& t : a) out.push_back(ZTerm{t.monomial * ma, t.coefficient * ca});
  subtract_multiple_drop_lead(out, b, l / b.back().monomial, cb, order);
  return out;
}

struct Pair {
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

// Normal strategy: smallest lcm first, ties broken by pair index.
bool selected_before(const Pair& a, const Pair& b, const MonomialOrder& order) {
  const int c = order.compare(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  return a.j != b.j ? a.j < b.j : a.i < b.i;
}

}  // namespace

GroebnerBasis::GroebnerBasis(VariableSet vars, std::vector<Polynomial> generators,
                             MonomialOrder order, bool reduced)
    : vars_(std::move(vars)), generators_(std::move(generators)), order_(order), reduced_(reduced) {
  for (const Polynomial& g : generators_)
    if (!(g.vars() == vars_)) throw UsageError("basis generator over a different variable set");
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  if (!(p.vars() == vars_) && !generators_.empty())
    throw UsageError("polynomial over a different variable set than the basis");
  return polyalg::normal_form(p, generators_, order_);
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  VariableSet vars = generators.empty() ? VariableSet() : generators.front().vars();

  std::vector<ZList> basis;
  // live[k]: basis[k] belongs to the current basis (used for reduction and new pairs).
  std::vector<bool> live;
  std::vector<Pair> pairs;

  auto lead = [&](std::size_t k) -> const Monomial& { return basis[k].back().monomial; };

  // Gebauer-Moeller installation of a new element.
  auto add = [&](ZList g) {
    const std::size_t h = basis.size();
    basis.push_back(std::move(g));
    live.push_back(true);
    const Monomial& lh = lead(h);

    std::vector<Pair> fresh;
    for (std::size_t k = 0; k < h; ++k)
      if (live[k]) fresh.push_back(Pair{lcm(lh, lead(k)), k, h});
    // Chain criterion among the new pairs: drop {k,h} when another new pair's lcm
    // divides its lcm (among equal lcms one survives, a coprime one if present).
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (lh.coprime(lead(fresh[a].i))) continue;
      for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b) {
        if (a == b || !keep[b] || !fresh[b].lcm.divides(fresh[a].lcm)) continue;
        if (fresh[b].lcm != fresh[a].lcm || lh.coprime(lead(fresh[b].i)) || b < a) {
          keep[a] = false;
          ++st.chain_skips;
        }
      }
    }
    // Product criterion.
    std::vector<Pair> accepted;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      if (lh.coprime(lead(fresh[a].i))) {
        ++st.coprime_skips;
        continue;
      }
      accepted.push_back(std::move(fresh[a]));
    }
    // Chain criterion on old pairs {i,j}: lt(h) divides lcm(i,j) and differs from both sides.
    std::erase_if(pairs, [&](const Pair& p) {
      const bool drop = lh.divides(p.lcm) && lcm(lead(p.i), lh) != p.lcm && lcm(lead(p.j), lh) != p.lcm;
      if (drop) ++st.chain_skips;
      return drop;
    });
    for (Pair& p : accepted) pairs.push_back(std::move(p));
    // Elements whose leading monomial is a multiple of lt(h) leave the basis.
    for (std::size_t k = 0; k < h; ++k)
      if (live[k] && lh.divides(lead(k))) live[k] = false;
  };

  for (const Polynomial& g : generators) {
    if (!(g.vars() == vars)) throw UsageError("generators over different variable sets");
    if (g.is_zero()) continue;
    ZList r = reduce(to_integer(g, order), basis, live, order);
    if (!r.empty()) add(std::move(r));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [&](const Pair& a, const Pair& b) { return selected_before(a, b, order); });
    const Pair p = std::move(*best);
    pairs.erase(best);
    ++st.pairs_considered;
    ZList r = reduce(s_polynomial(basis[p.i], basis[p.j], p.lcm, order), basis, live, order);
    if (r.empty()) {
      ++st.zero_reductions;
      continue;
    }
    add(std::move(r));
  }

  // The live elements form a minimal basis: no live leading monomial divides another.
  // Interreduce each against the others; its leading term cannot be reduced.
  std::vector<ZList> reduced;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!live[i]) continue;
    std::vector<bool> others = live;
    others[i] = false;
    reduced.push_back(reduce(basis[i], basis, others, order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const ZList& a, const ZList& b) {
    return order.compare(a.back().monomial, b.back().monomial) > 0;
  });

  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (const ZList& g : reduced) out.push_back(to_monic(vars, g));
  return GroebnerBasis(std::move(vars), std::move(out), order, true);
}

bool is_member(const Polynomial& p, const GroebnerBasis& basis) { return basis.contains(p); }

bool is_groebner_basis(std::span<const Polynomial> polys, const MonomialOrder& order) {
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j)
      if (!normal_form(s_polynomial(polys[i], polys[j], order), polys, order).is_zero()) return false;
  return true;
}

}  // namespace thermoid::polyalg
