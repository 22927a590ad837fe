#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "thermoid/polyalg/polynomial.hpp"

namespace thermoid::ratfun {

/// The fixed primitive alphabet: coordinates x, y, temperature f(x,y), entropy g(x,y)
/// and their partials up to second order. Mixed partials are a single symbol.
enum class Primitive : std::uint8_t { X, Y, F, G, F1, F2, G1, G2, F11, F12, F22, G11, G12, G22 };

inline constexpr std::size_t kPrimitiveCount = 14;

inline constexpr std::array<Primitive, kPrimitiveCount> kAllPrimitives = {
    Primitive::X,  Primitive::Y,   Primitive::F,   Primitive::G,   Primitive::F1,
    Primitive::F2, Primitive::G1,  Primitive::G2,  Primitive::F11, Primitive::F12,
    Primitive::F22, Primitive::G11, Primitive::G12, Primitive::G22};

enum class Axis { x, y };

/// Lower-case name used in text: "x", "f1", "g12", ...
std::string_view primitive_name(Primitive p) noexcept;
std::optional<Primitive> primitive_from_name(std::string_view name) noexcept;

/// 0 for x, y, f, g; 1 for f1..g2; 2 for f11..g22.
int differential_order(Primitive p) noexcept;

/// Shared VariableSet over the alphabet, precedence in enum order.
const polyalg::VariableSet& primitive_variables();

polyalg::Polynomial symbol(Primitive p);
polyalg::Polynomial constant(const polyalg::Rational& value);

/// Derivative of a primitive symbol along an axis (x -> 1, f -> f1, f1 -> f11 along x ...).
/// Throws OrderCapExceeded for second-order symbols.
polyalg::Polynomial derivation_table(Primitive p, Axis axis);

}  // namespace thermoid::ratfun
