#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace thermoid::derivcalc {

/// Numeric code of a thermodynamic quantity:
///   1 p (x)   2 V (y)   3 T (u)   4 S (v)
///   5 Phi (E13, free enthalpy)   6 W (E14, enthalpy)
///   7 F (E23, free energy)       8 E (E24, energy)
class QuantityCode {
 public:
  /// Throws UsageError outside 1..8.
  explicit QuantityCode(int value);

  constexpr int value() const noexcept { return value_; }
  constexpr bool is_energy() const noexcept { return value_ >= 5; }

  friend constexpr auto operator<=>(QuantityCode, QuantityCode) = default;

 private:
  int value_;
};

/// Thermodynamic symbol: "p", "V", "T", "S", "Phi", "W", "F", "E".
std::string_view thermo_symbol(QuantityCode q) noexcept;
/// Neutral notation: "x", "y", "u", "v", "E13", "E14", "E23", "E24".
std::string_view neutral_symbol(QuantityCode q) noexcept;
/// Accepts a digit 1..8 or a thermodynamic symbol.
std::optional<QuantityCode> quantity_from_text(std::string_view text) noexcept;

/// (a,b,c): derivative of a, as a function of b and c, with respect to b at fixed c.
struct DerivTriple {
  QuantityCode a, b, c;

  /// Throws UsageError when b == c.
  static DerivTriple make(int a, int b, int c);
  friend bool operator==(const DerivTriple&, const DerivTriple&) = default;
};

/// [a,b;c,d]: Jacobian determinant of the map (c,d) -> (a,b).
struct JacobianSpec {
  QuantityCode a, b, c, d;

  /// Throws UsageError when c == d.
  static JacobianSpec make(int a, int b, int c, int d);
  friend bool operator==(const JacobianSpec&, const JacobianSpec&) = default;
};

/// ((a,b,c),d,e): derivative of (a,b,c) with respect to d at fixed e.
struct SecondDerivSpec {
  DerivTriple inner;
  QuantityCode d, e;

  /// Throws UsageError when b == c or d == e.
  static SecondDerivSpec make(int a, int b, int c, int d, int e);
  friend bool operator==(const SecondDerivSpec&, const SecondDerivSpec&) = default;
};

/// Renderings in the bracket notation: "(3,1,2)", "[3,4;1,2]", "((3,1,2),2,1)".
std::string to_string(const DerivTriple& t);
std::string to_string(const JacobianSpec& j);
std::string to_string(const SecondDerivSpec& s);

}  // namespace thermoid::derivcalc
