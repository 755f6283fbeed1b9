#pragma once

#include <memory>
#include <string>

#include "anfgb/mpoly.hpp"
#include "anfgb/upoly.hpp"

namespace anfgb {

/// K = Q[t]/<f> with f monic irreducible (trusted, not checked). Elements
/// are residues of degree < deg f; inversion goes through the extended
/// Euclidean algorithm against f.
class NumberField {
public:
  using Elem = UniPolyQ;

  NumberField(UniPolyQ minpoly, std::string name);

  const UniPolyQ& minpoly() const { return ctx_->minpoly; }
  const std::string& name() const { return ctx_->name; }
  int degree() const { return ctx_->minpoly.degree(); }

  /// Reduces an arbitrary Q[t] polynomial into canonical residue form.
  Elem element(const UniPolyQ& a) const { return rem(a, ctx_->minpoly); }
  Elem generator() const { return element(UniPolyQ::monomial(RationalField{}, 1, 1)); }
  Elem from_rational(const Rational& q) const { return UniPolyQ::constant(RationalField{}, q); }

  Elem zero() const { return UniPolyQ(RationalField{}); }
  Elem one() const { return from_rational(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  std::string format(const Elem& a) const { return anfgb::format(a, ctx_->name); }
  bool is_compound(const Elem& a) const;

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.ctx_ == b.ctx_ ||
           (a.ctx_->minpoly == b.ctx_->minpoly && a.ctx_->name == b.ctx_->name);
  }

private:
  struct Context {
    UniPolyQ minpoly;
    std::string name;
    std::vector<Integer> scaled_minpoly;  // minpoly_den * minpoly, integral
    Integer minpoly_den;
  };
  std::shared_ptr<const Context> ctx_;
};

/// a^-1 in K; throws ZeroInversion for a = 0.
NumberField::Elem nf_invert(const NumberField& field, const NumberField::Elem& a);

using RingK = RingPtr<NumberField>;
using PolyK = MultiPoly<NumberField>;

}  // namespace anfgb
