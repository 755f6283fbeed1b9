#include "anfgb/monomial.hpp"

#include <algorithm>
#include <string>

namespace anfgb {

Monomial::Monomial(std::size_t arity) : n_(static_cast<std::uint8_t>(arity)) {
  if (arity > kMaxVariables) {
    throw Error(ErrorCode::InvalidArgument,
                "at most " + std::to_string(kMaxVariables) + " variables supported");
  }
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 0xFFFF) throw Error(ErrorCode::InvalidArgument, "exponent overflow");
  e_[i] = static_cast<Exponent>(e);
}

unsigned Monomial::degree() const { return degree(0, n_); }

unsigned Monomial::degree(std::size_t begin, std::size_t end) const {
  unsigned d = 0;
  for (std::size_t i = begin; i < end; ++i) d += e_[i];
  return d;
}

bool Monomial::is_one() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i]) return false;
  }
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r = other;
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<Exponent>(other.e_[i] - e_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] && other.e_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::ArityMismatch, "monomial arities differ");
  Monomial r = a;
  for (std::size_t i = 0; i < a.n_; ++i) {
    const unsigned e = unsigned{a.e_[i]} + b.e_[i];
    if (e > 0xFFFF) throw Error(ErrorCode::InvalidArgument, "exponent overflow");
    r.e_[i] = static_cast<Monomial::Exponent>(e);
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::ArityMismatch, "monomial arities differ");
  Monomial r = a;
  for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

namespace {

std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b, std::size_t begin,
                                 std::size_t end) {
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering degrevlex_block(const Monomial& a, const Monomial& b, std::size_t begin,
                                     std::size_t end) {
  const unsigned da = a.degree(begin, end);
  const unsigned db = b.degree(begin, end);
  if (da != db) return da <=> db;
  return revlex_tail(a, b, begin, end);
}

std::strong_ordering lex_block(const Monomial& a, const Monomial& b, std::size_t begin,
                               std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.arity() != b.arity()) throw Error(ErrorCode::ArityMismatch, "monomial arities differ");
  const std::size_t n = a.arity();
  switch (kind_) {
    case Kind::DegRevLex:
      return degrevlex_block(a, b, 0, n);
    case Kind::Lex:
      return lex_block(a, b, 0, n);
    case Kind::Product: {
      const std::size_t k = std::min(block_, n);
      auto c = base_ == BaseOrder::DegRevLex ? degrevlex_block(a, b, 0, k) : lex_block(a, b, 0, k);
      if (c != 0) return c;
      return degrevlex_block(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace anfgb
