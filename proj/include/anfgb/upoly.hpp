#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anfgb/field.hpp"

namespace anfgb {

/// Dense univariate polynomial, coefficients indexed by degree. The zero
/// polynomial is the empty sequence; otherwise the last entry is nonzero.
template <CoefficientField F>
class UniPoly {
public:
  using Elem = typename F::Elem;

  UniPoly() requires std::default_initializable<F> = default;
  explicit UniPoly(F field) : field_(std::move(field)) {}
  UniPoly(F field, std::vector<Elem> coeffs)
      : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static UniPoly constant(const F& field, Elem c) {
    return UniPoly(field, std::vector<Elem>{std::move(c)});
  }
  /// c * t^k
  static UniPoly monomial(const F& field, Elem c, std::size_t k) {
    std::vector<Elem> v(k + 1, field.zero());
    v[k] = std::move(c);
    return UniPoly(field, std::move(v));
  }

  const F& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : field_.zero(); }
  const Elem& lead() const { return c_.back(); }
  bool is_one() const { return c_.size() == 1 && field_.equal(c_[0], field_.one()); }

  UniPoly& operator+=(const UniPoly& b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), field_.zero());
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = field_.add(c_[i], b.c_[i]);
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), field_.zero());
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = field_.sub(c_[i], b.c_[i]);
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) {
    for (auto& x : a.c_) x = a.field_.neg(x);
    return a;
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    const F& k = a.field_;
    std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (k.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        r[i + j] = k.add(r[i + j], k.mul(a.c_[i], b.c_[j]));
      }
    }
    return UniPoly(k, std::move(r));
  }
  UniPoly scaled(const Elem& s) const {
    std::vector<Elem> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(field_.mul(x, s));
    return UniPoly(field_, std::move(r));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
    }
    return true;
  }

private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  std::vector<Elem> c_;
};

using UniPolyQ = UniPoly<RationalField>;
using UniPolyP = UniPoly<PrimeField>;

template <CoefficientField F>
UniPoly<F> monic(const UniPoly<F>& a) {
  if (a.is_zero()) return a;
  return a.scaled(a.field().inv(a.lead()));
}

template <CoefficientField F>
UniPoly<F> derivative(const UniPoly<F>& a) {
  const F& k = a.field();
  std::vector<typename F::Elem> r;
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    typename F::Elem n = k.zero();
    // i * c_i by repeated doubling keeps this generic over any field.
    typename F::Elem term = a.coeffs()[i];
    for (std::size_t m = i; m > 0; m >>= 1) {
      if (m & 1) n = k.add(n, term);
      term = k.add(term, term);
    }
    r.push_back(n);
  }
  return UniPoly<F>(k, std::move(r));
}

template <CoefficientField F>
std::pair<UniPoly<F>, UniPoly<F>> divrem(const UniPoly<F>& a, const UniPoly<F>& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero polynomial");
  const F& k = a.field();
  if (a.degree() < b.degree()) return {UniPoly<F>(k), a};
  std::vector<typename F::Elem> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<typename F::Elem> q(r.size() - db, k.zero());
  const auto lead_inv = k.inv(b.lead());
  for (std::size_t i = r.size(); i-- > db;) {
    if (k.is_zero(r[i])) continue;
    const auto c = k.mul(r[i], lead_inv);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      r[i - db + j] = k.sub(r[i - db + j], k.mul(c, b.coeffs()[j]));
    }
  }
  r.resize(db);
  return {UniPoly<F>(k, std::move(q)), UniPoly<F>(k, std::move(r))};
}

template <CoefficientField F>
UniPoly<F> rem(const UniPoly<F>& a, const UniPoly<F>& b) {
  return divrem(a, b).second;
}

template <CoefficientField F>
struct ExtGcd {
  UniPoly<F> gcd;  // monic, or zero when both inputs are zero
  UniPoly<F> s;
  UniPoly<F> t;
};

/// s * a + t * b = gcd(a, b), gcd monic.
template <CoefficientField F>
ExtGcd<F> ext_gcd(const UniPoly<F>& a, const UniPoly<F>& b) {
  const F& k = a.field();
  UniPoly<F> r0 = a, r1 = b;
  UniPoly<F> s0 = UniPoly<F>::constant(k, k.one()), s1(k);
  UniPoly<F> t0(k), t1 = UniPoly<F>::constant(k, k.one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly<F> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UniPoly<F> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, UniPoly<F>(k), UniPoly<F>(k)};
  const auto inv = k.inv(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <CoefficientField F>
UniPoly<F> gcd(const UniPoly<F>& a, const UniPoly<F>& b) {
  UniPoly<F> r0 = a, r1 = b;
  while (!r1.is_zero()) {
    UniPoly<F> r = rem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return monic(r0);
}

/// base^e mod m.
template <CoefficientField F>
UniPoly<F> pow_mod(UniPoly<F> base, std::uint64_t e, const UniPoly<F>& m) {
  const F& k = m.field();
  UniPoly<F> acc = rem(UniPoly<F>::constant(k, k.one()), m);
  base = rem(base, m);
  while (e) {
    if (e & 1) acc = rem(acc * base, m);
    e >>= 1;
    if (e) base = rem(base * base, m);
  }
  return acc;
}

/// Throws ZeroPolynomial on a == 0.
template <CoefficientField F>
bool is_squarefree(const UniPoly<F>& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "is_squarefree of 0");
  return gcd(a, derivative(a)).degree() == 0;
}

/// Chinese remaindering for univariate polynomials over a field: given
/// pairwise coprime moduli m_i, precomputes h_i = prod m / m_i and s_i with
/// s_i h_i + t_i m_i = 1; combine() then returns sum (q_i s_i mod m_i) h_i.
template <CoefficientField F>
class PolyCrt {
public:
  explicit PolyCrt(std::vector<UniPoly<F>> moduli)
      : moduli_(std::move(moduli)), product_(product_of(moduli_)) {
    for (const auto& m : moduli_) {
      UniPoly<F> h = divrem(product_, m).first;
      ExtGcd<F> eg = ext_gcd(h, m);
      if (eg.gcd.degree() != 0) {
        throw Error(ErrorCode::NonCoprimeModuli, "moduli are not pairwise coprime");
      }
      cofactors_.push_back(std::move(h));
      bezout_.push_back(std::move(eg.s));
    }
  }

  UniPoly<F> combine(std::span<const UniPoly<F>> residues) const {
    if (residues.size() != moduli_.size()) {
      throw Error(ErrorCode::LengthMismatch, "residue count does not match moduli");
    }
    UniPoly<F> g(moduli_.front().field());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      if (residues[i].is_zero()) continue;
      UniPoly<F> c = rem(residues[i] * bezout_[i], moduli_[i]);
      g += c * cofactors_[i];
    }
    return g;
  }

  const std::vector<UniPoly<F>>& moduli() const { return moduli_; }
  const std::vector<UniPoly<F>>& cofactors() const { return cofactors_; }
  const UniPoly<F>& product() const { return product_; }

private:
  static UniPoly<F> product_of(const std::vector<UniPoly<F>>& moduli) {
    if (moduli.empty()) throw Error(ErrorCode::LengthMismatch, "no moduli");
    const F& k = moduli.front().field();
    UniPoly<F> prod = UniPoly<F>::constant(k, k.one());
    for (const auto& m : moduli) {
      if (m.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "zero modulus");
      prod = prod * m;
    }
    return prod;
  }

  std::vector<UniPoly<F>> moduli_;
  UniPoly<F> product_;
  std::vector<UniPoly<F>> cofactors_;
  std::vector<UniPoly<F>> bezout_;
};

/// g with deg g < deg prod m and g = q_i mod m_i for all i.
template <CoefficientField F>
UniPoly<F> cra_poly(std::span<const UniPoly<F>> q, std::span<const UniPoly<F>> m) {
  if (q.size() != m.size() || m.empty()) {
    throw Error(ErrorCode::LengthMismatch, "cra_poly needs equal nonempty sequences");
  }
  PolyCrt<F> crt(std::vector<UniPoly<F>>(m.begin(), m.end()));
  return crt.combine(q);
}

struct Factor {
  UniPolyP factor;
  int multiplicity;
};
using FactorList = std::vector<Factor>;

/// Ascending degree, then lexicographic on the ascending coefficient sequence.
bool canonical_less(const UniPolyP& a, const UniPolyP& b);

/// Complete factorization of a over F_p into monic irreducibles:
/// squarefree decomposition, distinct-degree split, then seeded
/// equal-degree splitting. The leading coefficient is dropped.
FactorList factor(const UniPolyP& a, std::uint64_t seed);

/// Product of the distinct-degree split; exposed for the irreducibility
/// certificate x^(p^d) = x mod g.
bool has_frobenius_certificate(const UniPolyP& g);

/// Canonical text, e.g. "t^2+1"; coefficients via the field's format().
template <CoefficientField F>
std::string format(const UniPoly<F>& a, std::string_view var) {
  if (a.is_zero()) return "0";
  const F& k = a.field();
  std::string out;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    const auto& c = a.coeffs()[i];
    if (k.is_zero(c)) continue;
    std::string cs = k.format(c);
    std::string mono;
    if (i == 1) mono = std::string(var);
    if (i > 1) mono = std::string(var) + "^" + std::to_string(i);
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (cs == "1") {
      term = mono;
    } else if (cs == "-1") {
      term = "-" + mono;
    } else {
      term = cs + "*" + mono;
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

UniPolyP map_mod_p(const UniPolyQ& a, const PrimeField& field);

}  // namespace anfgb
