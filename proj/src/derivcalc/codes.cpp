#include "thermoid/derivcalc/codes.hpp"

#include <array>
#include <iterator>

#include "thermoid/derivcalc/enumerate.hpp"
#include "thermoid/error.hpp"

namespace thermoid::derivcalc {
namespace {

constexpr std::array<std::string_view, 8> kThermo = {"p", "V", "T", "S", "Phi", "W", "F", "E"};
constexpr std::array<std::string_view, 8> kNeutral = {"x", "y", "u", "v", "E13", "E14", "E23", "E24"};

}  // namespace

QuantityCode::QuantityCode(int value) : value_(value) {
  if (value < 1 || value > 8)
    throw UsageError("quantity code " + std::to_string(value) + " outside 1..8");
}

std::string_view thermo_symbol(QuantityCode q) noexcept { return kThermo[q.value() - 1]; }
std::string_view neutral_symbol(QuantityCode q) noexcept { return kNeutral[q.value() - 1]; }

std::optional<QuantityCode> quantity_from_text(std::string_view text) noexcept {
  if (text.size() == 1 && text[0] >= '1' && text[0] <= '8') return QuantityCode(text[0] - '0');
  for (std::size_t i = 0; i < kThermo.size(); ++i)
    if (kThermo[i] == text) return QuantityCode(static_cast<int>(i) + 1);
  return std::nullopt;
}

DerivTriple DerivTriple::make(int a, int b, int c) {
  if (b == c) throw UsageError("coordinates must be distinct in (a,b,c)");
  return DerivTriple{QuantityCode(a), QuantityCode(b), QuantityCode(c)};
}

JacobianSpec JacobianSpec::make(int a, int b, int c, int d) {
  if (c == d) throw UsageError("coordinates must be distinct in [a,b;c,d]");
  return JacobianSpec{QuantityCode(a), QuantityCode(b), QuantityCode(c), QuantityCode(d)};
}

SecondDerivSpec SecondDerivSpec::make(int a, int b, int c, int d, int e) {
  if (d == e) throw UsageError("coordinates must be distinct in ((a,b,c),d,e)");
  return SecondDerivSpec{DerivTriple::make(a, b, c), QuantityCode(d), QuantityCode(e)};
}

std::string to_string(const DerivTriple& t) {
  return "(" + std::to_string(t.a.value()) + "," + std::to_string(t.b.value()) + "," +
         std::to_string(t.c.value()) + ")";
}

std::string to_string(const JacobianSpec& j) {
  return "[" + std::to_string(j.a.value()) + "," + std::to_string(j.b.value()) + ";" +
         std::to_string(j.c.value()) + "," + std::to_string(j.d.value()) + "]";
}

std::string to_string(const SecondDerivSpec& s) {
  return "(" + to_string(s.inner) + "," + std::to_string(s.d.value()) + "," +
         std::to_string(s.e.value()) + ")";
}

std::size_t count(SpecKind kind) {
  auto walk = [](auto stream) {
    std::size_t n = 0;
    for (auto it = stream.begin(); it != stream.end(); ++it) ++n;
    return n;
  };
  switch (kind) {
    case SpecKind::triples: return walk(triples());
    case SpecKind::jacobians: return walk(jacobians());
    case SpecKind::seconds: return walk(seconds());
  }
  return 0;
}

}  // namespace thermoid::derivcalc
