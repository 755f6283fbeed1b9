#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "anfgb/arith.hpp"

namespace anfgb {

/// What the polynomial and Groebner code needs from a coefficient domain.
/// `format` and `is_compound` are only used for printing.
template <class F>
concept CoefficientField = requires(const F& f, const typename F::Elem& a,
                                    const typename F::Elem& b) {
  typename F::Elem;
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.add(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.neg(a) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, b) } -> std::same_as<bool>;
  { f.format(a) } -> std::convertible_to<std::string>;
  { f.is_compound(a) } -> std::same_as<bool>;
  { f == f } -> std::convertible_to<bool>;
};

class RationalField {
public:
  using Elem = Rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw Error(ErrorCode::ZeroInversion, "inverse of 0 in Q");
    return 1 / a;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  std::string format(const Elem& a) const { return to_string(a); }
  bool is_compound(const Elem&) const { return false; }

  bool operator==(const RationalField&) const = default;
};

/// F_p for word-size p. Elements are canonical residues in [0, p).
class PrimeField {
public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem from_rational(const Rational& q) const { return reduce_mod(q, p_); }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(std::uint64_t{a} * b % p_);
  }
  Elem inv(Elem a) const { return static_cast<Elem>(mod_inverse(a, p_)); }
  Elem pow(Elem a, std::uint64_t e) const {
    return static_cast<Elem>(mod_pow(a, e, p_));
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }
  /// Symmetric representative, so p - 2 prints as -2.
  std::string format(Elem a) const;
  bool is_compound(Elem) const { return false; }

  bool operator==(const PrimeField&) const = default;

private:
  std::uint32_t p_;
};

}  // namespace anfgb
