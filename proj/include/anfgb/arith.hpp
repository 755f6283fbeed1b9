#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anfgb/error.hpp"

namespace anfgb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational num/den; throws InvalidArgument on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Inverse of a modulo p, p prime. Throws ZeroInversion when a == 0 mod p.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

/// Maps a/b to a * b^-1 mod p. Throws BadPrime when p divides b.
std::uint32_t reduce_mod(const Rational& q, std::uint32_t p);

/// Returns the unique c in [0, prod moduli) with c = residues[i] mod moduli[i].
Integer crt_integers(std::span<const Integer> residues,
                     std::span<const Integer> moduli);

/// Precomputed idempotents for repeated CRT over a fixed set of word-size
/// primes: c = sum r_i * e_i mod N with e_i = 1 mod p_i and 0 mod p_j.
class CrtBasis {
public:
  explicit CrtBasis(std::span<const std::uint32_t> primes);

  Integer combine(std::span<const std::uint32_t> residues) const;
  const Integer& modulus() const { return modulus_; }
  std::size_t size() const { return idempotents_.size(); }

private:
  Integer modulus_;
  std::vector<Integer> idempotents_;
};

/// Rational reconstruction of c mod N with |a|, b <= floor(sqrt(N/2)).
std::optional<Rational> try_farey(const Integer& c, const Integer& modulus);

/// As try_farey, but throws NoReconstruction on failure.
Rational farey(const Integer& c, const Integer& modulus);

}  // namespace anfgb
