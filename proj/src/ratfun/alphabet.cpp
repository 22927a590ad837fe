#include "thermoid/ratfun/alphabet.hpp"

#include <string>
#include <vector>

#include "thermoid/error.hpp"

namespace thermoid::ratfun {
namespace {

constexpr std::array<std::string_view, kPrimitiveCount> kNames = {
    "x", "y", "f", "g", "f1", "f2", "g1", "g2", "f11", "f12", "f22", "g11", "g12", "g22"};

using P = Primitive;

// Derivatives along x and y; nullopt marks the second-order cap.
struct TableEntry {
  int dx_constant;  // used when dx_symbol is empty: 0 or 1
  std::optional<P> dx_symbol;
  int dy_constant;
  std::optional<P> dy_symbol;
};

constexpr std::array<TableEntry, 8> kFirstOrderTable = {{
    {1, std::nullopt, 0, std::nullopt},  // x
    {0, std::nullopt, 1, std::nullopt},  // y
    {0, P::F1, 0, P::F2},                // f
    {0, P::G1, 0, P::G2},                // g
    {0, P::F11, 0, P::F12},              // f1
    {0, P::F12, 0, P::F22},              // f2
    {0, P::G11, 0, P::G12},              // g1
    {0, P::G12, 0, P::G22},              // g2
}};

}  // namespace

std::string_view primitive_name(Primitive p) noexcept { return kNames[static_cast<std::size_t>(p)]; }

std::optional<Primitive> primitive_from_name(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<Primitive>(i);
  return std::nullopt;
}

int differential_order(Primitive p) noexcept {
  auto i = static_cast<std::size_t>(p);
  return i < 4 ? 0 : (i < 8 ? 1 : 2);
}

const polyalg::VariableSet& primitive_variables() {
  static const polyalg::VariableSet vars(std::vector<std::string>(kNames.begin(), kNames.end()));
  return vars;
}

polyalg::Polynomial symbol(Primitive p) {
  return polyalg::Polynomial::variable(primitive_variables(), static_cast<std::size_t>(p));
}

polyalg::Polynomial constant(const polyalg::Rational& value) {
  return polyalg::Polynomial::constant(primitive_variables(), value);
}

polyalg::Polynomial derivation_table(Primitive p, Axis axis) {
  if (differential_order(p) == 2)
    throw OrderCapExceeded("cannot differentiate second-order symbol '" +
                           std::string(primitive_name(p)) + "'");
  const TableEntry& e = kFirstOrderTable[static_cast<std::size_t>(p)];
  const auto& sym = axis == Axis::x ? e.dx_symbol : e.dy_symbol;
  if (sym) return symbol(*sym);
  return constant(axis == Axis::x ? e.dx_constant : e.dy_constant);
}

}  // namespace thermoid::ratfun
