#include "thermoid/polyalg/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "thermoid/polyalg/monomial_order.hpp"

namespace thermoid::polyalg {

Monomial::Monomial(std::vector<Exponent> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), Exponent{0})) {}

Monomial Monomial::variable(std::size_t variable_count, std::size_t index, Exponent power) {
  Monomial m(variable_count);
  m.exponents_.at(index) = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] += other.exponents_[i];
  out.degree_ += other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] -= divisor.exponents_[i];
  out.degree_ -= divisor.degree_;
  return out;
}

Monomial Monomial::with_exponent(std::size_t index, Exponent power) const {
  Monomial out(*this);
  out.degree_ = out.degree_ - out.exponents_.at(index) + power;
  out.exponents_[index] = power;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponents_[i], b.exponents_[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exponents_[i], b.exponents_[i]);
  return Monomial(std::move(e));
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : exponents_) h = (h ^ e) * 0x100000001b3ull;
  return h;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  if (kind_ == OrderKind::grlex && a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] != eb[i]) return ea[i] < eb[i] ? -1 : 1;
  return 0;
}

}  // namespace thermoid::polyalg
