#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "anfgb/error.hpp"

namespace anfgb {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector of fixed arity. By convention the tag variable t, when
/// present, occupies the last slot.
class Monomial {
public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  std::size_t arity() const { return n_; }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const;
  unsigned degree(std::size_t begin, std::size_t end) const;
  bool is_one() const;

  /// True iff this divides other.
  bool divides(const Monomial& other) const;
  /// other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

private:
  std::array<Exponent, kMaxVariables> e_{};
  std::uint8_t n_ = 0;
};

enum class BaseOrder { DegRevLex, Lex };

/// degrevlex, lex, or the two-block product ordering used for the tagged
/// ring: the first `block` variables under `base`, ties broken by
/// degrevlex on the remaining ones.
class MonomialOrder {
public:
  enum class Kind { DegRevLex, Lex, Product };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, BaseOrder::DegRevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, BaseOrder::Lex, 0); }
  static MonomialOrder product(BaseOrder first, std::size_t block) {
    return MonomialOrder(Kind::Product, first, block);
  }

  Kind kind() const { return kind_; }
  BaseOrder base() const { return base_; }
  std::size_t block() const { return block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder&) const = default;

private:
  MonomialOrder(Kind kind, BaseOrder base, std::size_t block)
      : kind_(kind), base_(base), block_(block) {}

  Kind kind_;
  BaseOrder base_;
  std::size_t block_;
};

inline std::strong_ordering compare(const MonomialOrder& order, const Monomial& a,
                                    const Monomial& b) {
  return order.compare(a, b);
}

}  // namespace anfgb
