#include "thermoid/ratfun/poly_gcd.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "thermoid/error.hpp"
#include "thermoid/polyalg/division.hpp"

namespace thermoid::ratfun {
namespace {

using polyalg::Integer;
using polyalg::Monomial;
using polyalg::MonomialOrder;
using polyalg::Polynomial;
using polyalg::Rational;
using polyalg::Term;

// Modular images. p = 2^61 - 1 is prime; products fit in 128 bits.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e != 0; e >>= 1, base = mul_mod(base, base))
    if (e & 1) r = mul_mod(r, base);
  return r;
}

std::optional<std::uint64_t> coefficient_mod(const Rational& q) {
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
  return mul_mod(num, pow_mod(den, kPrime - 2));
}

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Image of p in Z_p[t] after substituting point[i] for every variable i != v.
std::optional<ModPoly> univariate_image(const Polynomial& p, std::size_t v, const std::vector<std::uint64_t>& point) {
  ModPoly out(p.degree_in(v) + 1, 0);
  for (const Term& t : p.terms()) {
    auto c = coefficient_mod(t.coefficient);
    if (!c) return std::nullopt;
    std::uint64_t value = *c;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (i != v && t.monomial[i] != 0) value = mul_mod(value, pow_mod(point[i], t.monomial[i]));
    std::uint64_t& slot = out[t.monomial[v]];
    slot = (slot + value) % kPrime;
  }
  return out;
}

std::size_t mod_gcd_degree(ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    const std::uint64_t inv = pow_mod(b.back(), kPrime - 2);
    while (a.size() >= b.size()) {
      const std::uint64_t factor = mul_mod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = (a[shift + i] + kPrime - mul_mod(factor, b[i])) % kPrime;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Variables that the gcd of a and b may involve. A variable is excluded when, at a
// random point with both leading coefficients nonzero, the univariate images have
// a constant gcd mod p: with a = g h over the integers, the image of g divides both
// images and keeps its degree, so deg_v(g) must be 0.
std::vector<std::size_t> possible_gcd_variables(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = a.vars().size();
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint64_t> pick(1, kPrime - 1);
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < n; ++v) {
    const auto da = a.degree_in(v);
    const auto db = b.degree_in(v);
    if (da == 0 || db == 0) continue;
    bool excluded = false;
    for (int attempt = 0; attempt < 3 && !excluded; ++attempt) {
      std::vector<std::uint64_t> point(n);
      for (auto& x : point) x = pick(rng);
      auto ia = univariate_image(a, v, point);
      auto ib = univariate_image(b, v, point);
      if (!ia || !ib || ia->back() == 0 || ib->back() == 0) continue;
      excluded = mod_gcd_degree(std::move(*ia), std::move(*ib)) == 0;
      break;
    }
    if (!excluded) keep.push_back(v);
  }
  return keep;
}

// Coefficients of p as a polynomial in the variables outside `inner`, each a
// polynomial in the `inner` variables only.
std::vector<Polynomial> coefficients_outside(const Polynomial& p, const std::vector<bool>& inner) {
  std::vector<std::pair<Monomial, std::vector<Term>>> groups;
  for (const Term& t : p.terms()) {
    Monomial outer = t.monomial;
    Monomial rest = t.monomial;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i])
        outer = outer.with_exponent(i, 0);
      else
        rest = rest.with_exponent(i, 0);
    }
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == outer; });
    if (it == groups.end()) {
      groups.emplace_back(outer, std::vector<Term>{});
      it = std::prev(groups.end());
    }
    it->second.push_back(Term{rest, t.coefficient});
  }
  std::vector<Polynomial> out;
  out.reserve(groups.size());
  for (auto& g : groups) out.push_back(Polynomial::from_terms(p.vars(), std::move(g.second)));
  return out;
}

Polynomial one_like(const Polynomial& p) { return Polynomial::constant(p.vars(), 1); }

Polynomial normalize(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p.scaled(primitive_scale(p, MonomialOrder::lex()));
}

Polynomial exact(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error("internal: inexact division in gcd");
  return *q;
}

Monomial monomial_content(const Polynomial& p) {
  auto terms = p.terms();
  Monomial g = terms.front().monomial;
  for (const Term& t : terms.subspan(1)) g = gcd(g, t.monomial);
  return g;
}

Polynomial strip_monomial(const Polynomial& p, const Monomial& m) {
  if (m.is_one()) return p;
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& t : p.terms()) out.push_back(Term{t.monomial / m, t.coefficient});
  return Polynomial::from_terms(p.vars(), std::move(out));
}

// Coefficients of p viewed as a polynomial in variable v; entry k multiplies v^k.
std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t v) {
  std::vector<std::vector<Term>> buckets(p.degree_in(v) + 1);
  for (const Term& t : p.terms()) buckets[t.monomial[v]].push_back(Term{t.monomial.with_exponent(v, 0), t.coefficient});
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(p.vars(), std::move(b)));
  return out;
}

Polynomial leading_coefficient_in(const Polynomial& p, std::size_t v) {
  auto d = p.degree_in(v);
  std::vector<Term> out;
  for (const Term& t : p.terms())
    if (t.monomial[v] == d) out.push_back(Term{t.monomial.with_exponent(v, 0), t.coefficient});
  return Polynomial::from_terms(p.vars(), std::move(out));
}

Polynomial content_in(const Polynomial& p, std::size_t v) {
  std::vector<Polynomial> coeffs = coefficients_in(p, v);
  std::erase_if(coeffs, [](const Polynomial& c) { return c.is_zero(); });
  // Small coefficients first: a trivial gcd shows up early.
  std::sort(coeffs.begin(), coeffs.end(), [](const Polynomial& a, const Polynomial& b) { return a.size() < b.size(); });
  Polynomial g(p.vars());
  for (const Polynomial& c : coeffs) {
    g = gcd(g, c);
    if (g.is_constant()) return one_like(p);
  }
  return g;
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t v) {
  return normalize(exact(p, content_in(p, v)));
}

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t v) {
  const auto db = b.degree_in(v);
  const Polynomial lcb = leading_coefficient_in(b, v);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const auto da = a.degree_in(v);
    Polynomial lca = leading_coefficient_in(a, v);
    Monomial shift = Monomial::variable(a.vars().size(), v, da - db);
    a = lcb * a - lca * b.times_term(shift, 1);
  }
  return a;
}

// Heuristic gcd by evaluation at large integers. Inputs have integer
// coefficients and involve only the variables in `active`. Substituting xi for
// the last active variable maps the problem to one fewer variable; the gcd of
// the images is lifted back by symmetric xi-adic expansion and accepted only if
// it divides both inputs. Returns nullopt when no evaluation point succeeds.
constexpr int kHeuristicAttempts = 6;
constexpr std::size_t kHeuristicMaxBits = std::size_t{1} << 20;

Integer integer_content(const Polynomial& p) {
  Integer g = 0;
  for (const Term& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_num_mpz_t());
  return g;
}

Integer max_norm(const Polynomial& p) {
  Integer m = 0;
  for (const Term& t : p.terms())
    if (abs(t.coefficient.get_num()) > m) m = abs(t.coefficient.get_num());
  return m;
}

Polynomial evaluate_at(const Polynomial& p, std::size_t v, const Integer& xi) {
  std::vector<Integer> powers{Integer(1)};
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& t : p.terms()) {
    const auto e = t.monomial[v];
    while (powers.size() <= e) powers.push_back(powers.back() * xi);
    out.push_back(Term{t.monomial.with_exponent(v, 0), Rational(t.coefficient.get_num() * powers[e])});
  }
  return Polynomial::from_terms(p.vars(), std::move(out));
}

Polynomial interpolate_at(const Polynomial& h, std::size_t v, const Integer& xi) {
  const Integer half = xi / 2;
  std::vector<Term> out;
  Integer digit;
  for (const Term& t : h.terms()) {
    Integer c = t.coefficient.get_num();
    for (Monomial::Exponent e = 0; c != 0; ++e) {
      mpz_fdiv_r(digit.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (digit > half) digit -= xi;
      if (digit != 0) out.push_back(Term{t.monomial.with_exponent(v, e), Rational(digit)});
      c -= digit;
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
    }
  }
  return Polynomial::from_terms(h.vars(), std::move(out));
}

std::optional<Polynomial> heuristic_gcd(Polynomial f, Polynomial g, std::vector<std::size_t> active) {
  const Integer cf = integer_content(f);
  const Integer cg = integer_content(g);
  Integer c;
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  if (active.empty()) return Polynomial::constant(f.vars(), Rational(c));
  f = f.scaled(Rational(1) / Rational(cf));
  g = g.scaled(Rational(1) / Rational(cg));

  const std::size_t v = active.back();
  active.pop_back();
  // Content over Z[v]: a common factor in v alone would survive every evaluation
  // as an integer factor of the image gcd and spoil the lift.
  Polynomial common_v = Polynomial::constant(f.vars(), 1);
  if (!active.empty()) {
    const auto content_v = [&](Polynomial& p) -> std::optional<Polynomial> {
      std::vector<bool> inner(p.vars().size(), false);
      inner[v] = true;
      Polynomial cont(p.vars());
      for (const Polynomial& coeff : coefficients_outside(p, inner)) {
        if (cont.is_zero()) {
          cont = coeff;
        } else {
          auto h = heuristic_gcd(cont, coeff, {v});
          if (!h) return std::nullopt;
          cont = *h;
        }
        if (cont.is_constant()) return Polynomial::constant(p.vars(), 1);
      }
      cont = normalize(cont);
      p = *divide_exact(p, cont);
      return cont;
    };
    auto fv = content_v(f);
    auto gv = content_v(g);
    if (!fv || !gv) return std::nullopt;
    if (!fv->is_constant() && !gv->is_constant()) {
      auto h = heuristic_gcd(*fv, *gv, {v});
      if (!h) return std::nullopt;
      common_v = *h;
    }
  }
  const Integer fn = max_norm(f);
  const Integer gn = max_norm(g);
  // xi above twice the smaller norm: coefficients of a common factor rarely exceed it.
  Integer xi = 2 * (fn < gn ? fn : gn) + 29;
  const Integer lf = abs(f.leading_term(MonomialOrder::lex()).coefficient.get_num());
  const Integer lg = abs(g.leading_term(MonomialOrder::lex()).coefficient.get_num());
  Integer alt = fn / lf;
  if (gn / lg < alt) alt = gn / lg;
  alt = 2 * alt + 2;
  if (alt > xi) xi = alt;

  for (int attempt = 0; attempt < kHeuristicAttempts; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) > kHeuristicMaxBits) return std::nullopt;
    const Polynomial ff = evaluate_at(f, v, xi);
    const Polynomial gg = evaluate_at(g, v, xi);
    if (!ff.is_zero() && !gg.is_zero()) {
      const auto h = heuristic_gcd(ff, gg, active);
      if (!h) return std::nullopt;
      Polynomial lifted = interpolate_at(*h, v, xi);
      if (!lifted.is_zero()) {
        lifted = lifted.scaled(Rational(1) / Rational(integer_content(lifted)));
        if (divide_exact(f, lifted) && divide_exact(g, lifted)) return (lifted * common_v).scaled(Rational(c));
      }
    }
    xi = 73794 * xi * Integer(sqrt(Integer(sqrt(xi)))) / 27011;
  }
  return std::nullopt;
}

// gcd of two polynomials, both primitive in v and of positive degree in v.
Polynomial primitive_prs(Polynomial a, Polynomial b, std::size_t v) {
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  for (;;) {
    Polynomial r = pseudo_remainder(a, b, v);
    if (r.is_zero()) return normalize(b);
    if (r.degree_in(v) == 0) return one_like(b);
    a = std::move(b);
    b = primitive_part_in(r, v);
  }
}

Polynomial gcd_without_monomial_content(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant() || b.is_constant()) return one_like(a);
  if (a == b) return normalize(a);
  const std::vector<std::size_t> candidates = possible_gcd_variables(a, b);
  if (candidates.empty()) return one_like(a);
  std::vector<bool> inner(a.vars().size(), false);
  for (std::size_t v : candidates) inner[v] = true;
  bool all_inner = true;
  for (const Polynomial* p : {&a, &b})
    for (const Term& t : p->terms())
      for (std::size_t i = 0; i < inner.size(); ++i)
        if (!inner[i] && t.monomial[i] != 0) all_inner = false;
  if (!all_inner) {
    // The gcd lies in Q[inner]; it is the gcd of all coefficients over the other variables.
    Polynomial g(a.vars());
    for (const Polynomial* p : {&a, &b})
      for (const Polynomial& c : coefficients_outside(*p, inner)) {
        g = gcd(g, c);
        if (g.is_constant()) return one_like(a);
      }
    return normalize(g);
  }
  // Main variable: the lowest degree keeps the remainder sequence short.
  if (auto h = heuristic_gcd(normalize(a), normalize(b), candidates)) return normalize(*h);
  std::size_t v = candidates.front();
  auto cost = [&](std::size_t k) { return std::min(a.degree_in(k), b.degree_in(k)); };
  for (std::size_t k : candidates)
    if (cost(k) < cost(v)) v = k;
  bool in_a = a.degree_in(v) > 0;
  bool in_b = b.degree_in(v) > 0;
  if (!in_b) return gcd(content_in(a, v), b);
  if (!in_a) return gcd(a, content_in(b, v));
  Polynomial ca = content_in(a, v);
  Polynomial cb = content_in(b, v);
  Polynomial c = gcd(ca, cb);
  Polynomial g = primitive_prs(exact(a, ca), exact(b, cb), v);
  return normalize(c * g);
}

}  // namespace

Rational primitive_scale(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw UsageError("primitive scale of the zero polynomial");
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const Term& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.leading_term(order).coefficient < 0) scale = -scale;
  return scale;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
  if (b.is_constant()) return a.scaled(1 / b.constant_term());
  std::vector<Polynomial> divisor{b};
  auto result = polyalg::divide(a, divisor, MonomialOrder::lex());
  if (!result.remainder.is_zero()) return std::nullopt;
  return std::move(result.quotients.front());
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  if (a.is_constant() || b.is_constant()) return one_like(a);
  Monomial ma = monomial_content(a);
  Monomial mb = monomial_content(b);
  Monomial mg = gcd(ma, mb);
  Polynomial core = gcd_without_monomial_content(strip_monomial(a, ma), strip_monomial(b, mb));
  return core.times_term(mg, 1);
}

}  // namespace thermoid::ratfun
