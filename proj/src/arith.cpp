#include "anfgb/arith.hpp"

#include <array>

namespace anfgb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInversion: return "ZeroInversion";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonCoprimeModuli: return "NonCoprimeModuli";
    case ErrorCode::NoReconstruction: return "NoReconstruction";
    case ErrorCode::ExhaustedCandidates: return "ExhaustedCandidates";
    case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::EmptyPool: return "EmptyPool";
    case ErrorCode::RoundLimitExceeded: return "RoundLimitExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UndeclaredVariable: return "UndeclaredVariable";
    case ErrorCode::NonMonicMinpoly: return "NonMonicMinpoly";
    case ErrorCode::DuplicateVariable: return "DuplicateVariable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod128(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven witness set for n < 3.3e24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod128(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  return pow_mod128(base, exp, p);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw Error(ErrorCode::ZeroInversion, "inverse of 0 mod " + std::to_string(p));
  // Extended Euclid on signed 128-bit to stay clear of overflow for any p.
  __int128 r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (r0 != 1) throw Error(ErrorCode::ZeroInversion, "not invertible");
  if (s0 < 0) s0 += p;
  return static_cast<std::uint64_t>(s0);
}

std::uint32_t reduce_mod(const Rational& q, std::uint32_t p) {
  const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) {
    throw Error(ErrorCode::BadPrime,
                std::to_string(p) + " divides denominator of " + to_string(q));
  }
  const unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return static_cast<std::uint32_t>(mul_mod(num, mod_inverse(den, p), p));
}

Integer crt_integers(std::span<const Integer> residues,
                     std::span<const Integer> moduli) {
  if (residues.size() != moduli.size() || moduli.empty()) {
    throw Error(ErrorCode::LengthMismatch, "residues and moduli must be equal-length and nonempty");
  }
  Integer acc = residues[0];
  Integer modulus = moduli[0];
  if (modulus <= 0) throw Error(ErrorCode::InvalidArgument, "moduli must be positive");
  mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), modulus.get_mpz_t());
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    const Integer& m = moduli[i];
    if (m <= 0) throw Error(ErrorCode::InvalidArgument, "moduli must be positive");
    Integer g, inv;
    mpz_gcdext(g.get_mpz_t(), inv.get_mpz_t(), nullptr, modulus.get_mpz_t(), m.get_mpz_t());
    if (g != 1) {
      throw Error(ErrorCode::NonCoprimeModuli,
                  to_string(modulus) + " and " + to_string(m) + " share a factor");
    }
    // acc + modulus * ((r - acc) * modulus^-1 mod m)
    Integer delta = residues[i] - acc;
    delta *= inv;
    mpz_fdiv_r(delta.get_mpz_t(), delta.get_mpz_t(), m.get_mpz_t());
    acc += modulus * delta;
    modulus *= m;
  }
  return acc;
}

CrtBasis::CrtBasis(std::span<const std::uint32_t> primes) : modulus_(1) {
  for (std::uint32_t p : primes) modulus_ *= p;
  idempotents_.reserve(primes.size());
  for (std::uint32_t p : primes) {
    Integer cofactor = modulus_ / p;
    const std::uint64_t inv = mod_inverse(mpz_fdiv_ui(cofactor.get_mpz_t(), p), p);
    idempotents_.push_back(cofactor * static_cast<unsigned long>(inv));
  }
}

Integer CrtBasis::combine(std::span<const std::uint32_t> residues) const {
  if (residues.size() != idempotents_.size()) {
    throw Error(ErrorCode::LengthMismatch, "residue count does not match CRT basis");
  }
  Integer acc = 0;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (residues[i] != 0) {
      mpz_addmul_ui(acc.get_mpz_t(), idempotents_[i].get_mpz_t(), residues[i]);
    }
  }
  mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), modulus_.get_mpz_t());
  return acc;
}

std::optional<Rational> try_farey(const Integer& c, const Integer& modulus) {
  if (modulus <= 0 || c < 0 || c >= modulus) {
    throw Error(ErrorCode::InvalidArgument, "farey needs 0 <= c < N");
  }
  Integer bound = modulus / 2;
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());

  // Half-extended Euclid on (N, c), tracking only the cofactor of c.
  Integer r0 = modulus, r1 = c, t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(tmp);
    tmp = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(tmp);
  }
  // Invariant: r1 = t1 * c mod N.
  if (abs(t1) > bound || t1 == 0) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  return Rational(r1, t1);
}

Rational farey(const Integer& c, const Integer& modulus) {
  if (auto q = try_farey(c, modulus)) return *q;
  throw Error(ErrorCode::NoReconstruction,
              "no a/b with |a|,b <= sqrt(N/2) for " + to_string(c) + " mod " + to_string(modulus));
}

}  // namespace anfgb
