#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "anfgb/field.hpp"
#include "anfgb/monomial.hpp"

namespace anfgb {

/// Coefficient field, variable names and monomial order of a polynomial
/// ring. Shared by every polynomial living in it.
template <CoefficientField F>
struct PolyRing {
  F field;
  std::vector<std::string> names;
  MonomialOrder order;

  std::size_t nvars() const { return names.size(); }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field == b.field && a.names == b.names && a.order == b.order;
  }
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <CoefficientField F>
RingPtr<F> make_ring(F field, std::vector<std::string> names, MonomialOrder order) {
  if (names.size() > kMaxVariables) {
    throw Error(ErrorCode::InvalidArgument, "too many variables");
  }
  return std::make_shared<const PolyRing<F>>(
      PolyRing<F>{std::move(field), std::move(names), order});
}

template <CoefficientField F>
struct Term {
  Monomial mono;
  typename F::Elem coef;
};

/// Sparse polynomial: terms strictly decreasing under the ring order, no
/// zero coefficients.
template <CoefficientField F>
class MultiPoly {
public:
  using Elem = typename F::Elem;
  using TermT = Term<F>;

  MultiPoly() = default;
  explicit MultiPoly(RingPtr<F> ring) : ring_(std::move(ring)) {}

  /// Sorts, merges equal monomials and drops zeros.
  static MultiPoly from_terms(RingPtr<F> ring, std::vector<TermT> terms) {
    MultiPoly p(std::move(ring));
    const auto& order = p.ring_->order;
    const F& k = p.ring_->field;
    std::sort(terms.begin(), terms.end(), [&](const TermT& a, const TermT& b) {
      return order.greater(a.mono, b.mono);
    });
    for (auto& t : terms) {
      if (t.mono.arity() != p.ring_->nvars()) {
        throw Error(ErrorCode::ArityMismatch, "term arity does not match ring");
      }
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coef = k.add(p.terms_.back().coef, t.coef);
        if (k.is_zero(p.terms_.back().coef)) p.terms_.pop_back();
      } else if (!k.is_zero(t.coef)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }
  /// Terms must already be canonical; no checking.
  static MultiPoly from_sorted(RingPtr<F> ring, std::vector<TermT> terms) {
    MultiPoly p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }
  static MultiPoly constant(RingPtr<F> ring, Elem c) {
    MultiPoly p(ring);
    if (!ring->field.is_zero(c)) p.terms_.push_back({Monomial(ring->nvars()), std::move(c)});
    return p;
  }
  static MultiPoly variable(RingPtr<F> ring, std::size_t i) {
    Monomial m(ring->nvars());
    m.set(i, 1);
    MultiPoly p(ring);
    p.terms_.push_back({m, ring->field.one()});
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field; }
  const std::vector<TermT>& terms() const { return terms_; }
  std::vector<TermT>& mutable_terms() { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Monomial& lm() const { return terms_.front().mono; }
  const Elem& lc() const { return terms_.front().coef; }
  const TermT& lt() const { return terms_.front(); }
  MultiPoly tail() const {
    MultiPoly r(ring_);
    if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
  }

  MultiPoly scaled(const Elem& c) const {
    const F& k = field();
    MultiPoly r(ring_);
    if (k.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, k.mul(t.coef, c)});
    return r;
  }
  /// c * m * this
  MultiPoly mul_term(const Elem& c, const Monomial& m) const {
    const F& k = field();
    MultiPoly r(ring_);
    if (k.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, k.mul(t.coef, c)});
    return r;
  }
  MultiPoly monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(lc()));
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    return merge(a, b, false);
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    return merge(a, b, true);
  }
  friend MultiPoly operator-(const MultiPoly& a) { return a.scaled(a.field().neg(a.field().one())); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a, b);
    std::vector<TermT> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    const F& k = a.field();
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) prod.push_back({x.mono * y.mono, k.mul(x.coef, y.coef)});
    }
    return from_terms(a.ring_, std::move(prod));
  }
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty() && !same_ring(a, b)) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) ||
          !a.field().equal(a.terms_[i].coef, b.terms_[i].coef)) {
        return false;
      }
    }
    return true;
  }

  static bool same_ring(const MultiPoly& a, const MultiPoly& b) {
    return a.ring_ == b.ring_ || (a.ring_ && b.ring_ && *a.ring_ == *b.ring_);
  }
  static void check_same_ring(const MultiPoly& a, const MultiPoly& b) {
    if (!same_ring(a, b)) throw Error(ErrorCode::RingMismatch, "operands live in different rings");
  }

private:
  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    check_same_ring(a, b);
    const F& k = a.field();
    const auto& order = a.ring_->order;
    MultiPoly r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      const auto c = order.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? k.neg(t.coef) : t.coef});
      } else {
        auto s = subtract ? k.sub(a.terms_[i].coef, b.terms_[j].coef)
                          : k.add(a.terms_[i].coef, b.terms_[j].coef);
        if (!k.is_zero(s)) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
      const auto& t = b.terms_[j];
      r.terms_.push_back({t.mono, subtract ? k.neg(t.coef) : t.coef});
    }
    return r;
  }

  RingPtr<F> ring_;
  std::vector<TermT> terms_;
};

using RingQ = RingPtr<RationalField>;
using RingP = RingPtr<PrimeField>;
using PolyQ = MultiPoly<RationalField>;
using PolyP = MultiPoly<PrimeField>;

/// e.g. "x^2*y" or "1"
std::string format_monomial(const Monomial& m, const std::vector<std::string>& names);

/// Canonical text: terms in decreasing order, `*` between factors, `^` for
/// powers. Compound coefficients are parenthesised.
template <CoefficientField F>
std::string format(const MultiPoly<F>& p) {
  if (p.is_zero()) return "0";
  const F& k = p.field();
  std::string out;
  for (const auto& t : p.terms()) {
    std::string cs = k.format(t.coef);
    std::string term;
    if (t.mono.is_one()) {
      term = cs;
    } else {
      const std::string mono = format_monomial(t.mono, p.ring()->names);
      if (k.is_compound(t.coef)) {
        term = "(" + cs + ")*" + mono;
      } else if (cs == "1") {
        term = mono;
      } else if (cs == "-1") {
        term = "-" + mono;
      } else {
        term = cs + "*" + mono;
      }
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

/// Coefficient-wise image in F_p[...] over the same variables and order;
/// throws BadPrime when p divides a denominator.
PolyP map_mod_p(const PolyQ& a, const RingP& target);

/// Same variables and order, F_p coefficients.
RingP ring_mod_p(const RingQ& ring, std::uint32_t p);

}  // namespace anfgb
