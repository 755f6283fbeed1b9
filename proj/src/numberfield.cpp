#include "anfgb/numberfield.hpp"

namespace anfgb {

namespace {

/// a = num / den with integer num.
Integer split_denominator(const UniPolyQ& a, std::vector<Integer>& num) {
  Integer den = 1;
  for (const auto& c : a.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  num.resize(a.coeffs().size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    const Rational& c = a.coeffs()[i];
    num[i] = c.get_num() * (den / c.get_den());
  }
  return den;
}

}  // namespace

NumberField::NumberField(UniPolyQ minpoly, std::string name) {
  if (minpoly.degree() < 1) {
    throw Error(ErrorCode::NonMonicMinpoly, "minimal polynomial must have degree >= 1");
  }
  UniPolyQ f = monic(minpoly);
  std::vector<Integer> scaled;
  Integer den = split_denominator(f, scaled);
  ctx_ = std::make_shared<const Context>(
      Context{std::move(f), std::move(name), std::move(scaled), std::move(den)});
}

// Products are formed over a common denominator with integer arithmetic and
// reduced by the integral multiple D*f of f; only the final coefficients are
// normalised. Going through mpq for every coefficient operation costs a gcd
// each time and dominates Buchberger over K.
NumberField::Elem NumberField::mul(const Elem& a, const Elem& b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  if (a.degree() == 0) return b.scaled(a.lead());
  if (b.degree() == 0) return a.scaled(b.lead());
  std::vector<Integer> an, bn;
  Integer den = split_denominator(a, an) * split_denominator(b, bn);
  std::vector<Integer> c(an.size() + bn.size() - 1);
  for (std::size_t i = 0; i < an.size(); ++i) {
    if (an[i] == 0) continue;
    for (std::size_t j = 0; j < bn.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), an[i].get_mpz_t(), bn[j].get_mpz_t());
    }
  }
  const std::vector<Integer>& F = ctx_->scaled_minpoly;  // lead = D
  const Integer& D = ctx_->minpoly_den;
  const std::size_t n = F.size() - 1;
  for (std::size_t k = c.size(); k-- > n;) {
    if (c[k] == 0) continue;
    const Integer q = c[k];
    if (D != 1) {
      for (std::size_t i = 0; i < k; ++i) c[i] *= D;
      den *= D;
    }
    for (std::size_t i = 0; i < n; ++i) {
      mpz_submul(c[k - n + i].get_mpz_t(), q.get_mpz_t(), F[i].get_mpz_t());
    }
    c[k] = 0;
  }
  c.resize(std::min(c.size(), n));
  std::vector<Rational> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i] = Rational(c[i], den);
    out[i].canonicalize();
  }
  return UniPolyQ(RationalField{}, std::move(out));
}

NumberField::Elem NumberField::inv(const Elem& a) const {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInversion, "inverse of 0 in " + ctx_->name);
  if (a.degree() == 0) return from_rational(1 / a.lead());
  ExtGcd<RationalField> eg = ext_gcd(a, ctx_->minpoly);
  if (eg.gcd.degree() != 0) {
    throw Error(ErrorCode::ZeroInversion, "element shares a factor with the minimal polynomial");
  }
  return rem(eg.s, ctx_->minpoly);
}

bool NumberField::is_compound(const Elem& a) const {
  int nonzero = 0;
  for (const auto& c : a.coeffs()) nonzero += (c != 0);
  return nonzero > 1;
}

NumberField::Elem nf_invert(const NumberField& field, const NumberField::Elem& a) {
  return field.inv(a);
}

}  // namespace anfgb
