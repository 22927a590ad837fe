#pragma once

#include <string_view>

#include "thermoid/polyalg/monomial.hpp"

namespace thermoid::polyalg {

enum class OrderKind { lex, grlex };

/// Admissible monomial order. Ties between variables are broken by VariableSet
/// precedence: the variable at position 0 is the largest.
class MonomialOrder {
 public:
  constexpr MonomialOrder() = default;
  constexpr explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  static constexpr MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
  static constexpr MonomialOrder grlex() { return MonomialOrder(OrderKind::grlex); }

  constexpr OrderKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return kind_ == OrderKind::lex ? "lex" : "grlex"; }

  /// Negative, zero or positive as a is smaller than, equal to or larger than b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

  friend constexpr bool operator==(MonomialOrder, MonomialOrder) = default;

 private:
  OrderKind kind_ = OrderKind::lex;
};

}  // namespace thermoid::polyalg
