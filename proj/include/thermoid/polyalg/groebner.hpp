#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "thermoid/polyalg/polynomial.hpp"

namespace thermoid::polyalg {

class GroebnerBasis {
 public:
  GroebnerBasis(VariableSet vars, std::vector<Polynomial> generators, MonomialOrder order,
                bool reduced);

  const VariableSet& vars() const noexcept { return vars_; }
  std::span<const Polynomial> generators() const noexcept { return generators_; }
  MonomialOrder order() const noexcept { return order_; }
  bool reduced() const noexcept { return reduced_; }
  std::size_t size() const noexcept { return generators_.size(); }

  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

 private:
  VariableSet vars_;
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
  bool reduced_;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t coprime_skips = 0;
  std::size_t chain_skips = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced Groebner basis of the ideal generated by `generators`.
///
/// Pairs are selected by the normal strategy (smallest lcm of leading monomials,
/// ties broken by pair index). Pairs with coprime leading monomials and pairs
/// covered by Buchberger's chain criterion are skipped. The result is
/// autoreduced, monic and sorted by descending leading monomial. Zero
/// generators are ignored; all generators must share one VariableSet.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         BuchbergerStats* stats = nullptr);

bool is_member(const Polynomial& p, const GroebnerBasis& basis);

/// True when every S-polynomial of the list reduces to zero modulo the list.
bool is_groebner_basis(std::span<const Polynomial> polys, const MonomialOrder& order);

}  // namespace thermoid::polyalg
