#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace thermoid::polyalg {

/// Power product over a fixed number of variables, stored as a dense exponent vector.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t variable_count) : exponents_(variable_count, 0) {}
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial variable(std::size_t variable_count, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return exponents_.size(); }
  Exponent operator[](std::size_t index) const { return exponents_[index]; }
  std::span<const Exponent> exponents() const noexcept { return exponents_; }
  Exponent degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; `divisor` must divide this monomial.
  Monomial operator/(const Monomial& divisor) const;

  Monomial with_exponent(std::size_t index, Exponent power) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exponents_ == b.exponents_;
  }

  std::size_t hash() const noexcept;

 private:
  std::vector<Exponent> exponents_;
  Exponent degree_ = 0;
};

}  // namespace thermoid::polyalg

template <>
struct std::hash<thermoid::polyalg::Monomial> {
  std::size_t operator()(const thermoid::polyalg::Monomial& m) const noexcept { return m.hash(); }
};
