#pragma once

#include <array>
#include <cstddef>
#include <iterator>
#include <ranges>

#include "thermoid/derivcalc/codes.hpp"

namespace thermoid::derivcalc {

enum class SpecKind { triples, jacobians, seconds };

namespace detail {

/// Lazy odometer over [1..8]^N yielding the tuples accepted by `Traits::valid`.
template <class Traits>
class SpecStream : public std::ranges::view_interface<SpecStream<Traits>> {
 public:
  static constexpr std::size_t N = Traits::arity;

  class iterator {
   public:
    using value_type = typename Traits::value_type;
    using difference_type = std::ptrdiff_t;

    iterator() { digits_.fill(1); settle(); }

    value_type operator*() const { return Traits::build(digits_); }
    iterator& operator++() {
      advance();
      settle();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    void advance() {
      for (std::size_t i = N; i-- > 0;) {
        if (++digits_[i] <= 8) return;
        digits_[i] = 1;
      }
      done_ = true;
    }
    void settle() {
      while (!done_ && !Traits::valid(digits_)) advance();
    }

    std::array<int, N> digits_{};
    bool done_ = false;
  };

  iterator begin() const { return iterator(); }
  std::default_sentinel_t end() const { return {}; }
};

template <std::size_t K>
constexpr bool pairwise_distinct(const std::array<int, K>& d, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (d[i] == d[j]) return false;
  return true;
}

struct TripleTraits {
  static constexpr std::size_t arity = 3;
  using value_type = DerivTriple;
  static bool valid(const std::array<int, 3>& d) { return pairwise_distinct(d, 3); }
  static DerivTriple build(const std::array<int, 3>& d) { return DerivTriple::make(d[0], d[1], d[2]); }
};

struct JacobianTraits {
  static constexpr std::size_t arity = 4;
  using value_type = JacobianSpec;
  static bool valid(const std::array<int, 4>& d) { return pairwise_distinct(d, 4); }
  static JacobianSpec build(const std::array<int, 4>& d) {
    return JacobianSpec::make(d[0], d[1], d[2], d[3]);
  }
};

struct SecondTraits {
  static constexpr std::size_t arity = 5;
  using value_type = SecondDerivSpec;
  static bool valid(const std::array<int, 5>& d) { return pairwise_distinct(d, 3) && d[3] != d[4]; }
  static SecondDerivSpec build(const std::array<int, 5>& d) {
    return SecondDerivSpec::make(d[0], d[1], d[2], d[3], d[4]);
  }
};

}  // namespace detail

/// Triples with a, b, c pairwise distinct, in lexicographic index order.
using TripleStream = detail::SpecStream<detail::TripleTraits>;
/// Jacobians with a, b, c, d pairwise distinct.
using JacobianStream = detail::SpecStream<detail::JacobianTraits>;
/// Second derivatives with a strict inner triple and d != e.
using SecondStream = detail::SpecStream<detail::SecondTraits>;

inline TripleStream triples() { return {}; }
inline JacobianStream jacobians() { return {}; }
inline SecondStream seconds() { return {}; }

/// Number of specs of the given kind, counted by walking the stream.
std::size_t count(SpecKind kind);

}  // namespace thermoid::derivcalc
