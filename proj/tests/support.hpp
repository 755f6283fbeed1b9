#pragma once

// Shared helpers for the unit and acceptance tests: small random generators
// with fixed seeds, and reference implementations that do not share code
// paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "anfgb/problem.hpp"

namespace anfgb::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rational small_rational(Rng& rng, std::int64_t num_bound, std::int64_t den_bound) {
  return make_rational(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
}

inline UniPolyP random_upoly_p(Rng& rng, const PrimeField& k, int degree, bool make_monic) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = static_cast<std::uint32_t>(uniform(rng, 0, k.characteristic() - 1));
  if (c.back() == 0) c.back() = 1;
  UniPolyP a(k, std::move(c));
  return make_monic ? monic(a) : a;
}

/// Problem text for a random instance in x1..xn over Q(a), deg f <= 3.
inline std::string random_problem_text(Rng& rng, int nvars, int ngens, int max_deg,
                                       int fdeg) {
  std::string text = "vars";
  for (int i = 1; i <= nvars; ++i) text += " x" + std::to_string(i);
  text += "\nminvar a\nminpoly a^" + std::to_string(fdeg);
  for (int d = fdeg - 1; d >= 0; --d) {
    const auto c = uniform(rng, -3, 3);
    if (d == 0 && c == 0) {
      text += "+1";  // keep f(0) != 0 to avoid a degenerate factor a
      continue;
    }
    if (c == 0) continue;
    text += (c > 0 ? "+" : "-") + std::to_string(std::abs(c));
    if (d > 0) text += "*a^" + std::to_string(d);
  }
  text += "\norder degrevlex\n";
  for (int g = 0; g < ngens; ++g) {
    std::string poly;
    const int terms = static_cast<int>(uniform(rng, 2, 4));
    for (int t = 0; t < terms; ++t) {
      std::string term = "(" + std::to_string(uniform(rng, -4, 4)) + "+" +
                         std::to_string(uniform(rng, -3, 3)) + "*a)";
      int left = static_cast<int>(uniform(rng, t == 0 ? 1 : 0, max_deg));
      for (int i = 1; i <= nvars && left > 0; ++i) {
        const int e = i == nvars ? left : static_cast<int>(uniform(rng, 0, left));
        if (e > 0) term += "*x" + std::to_string(i) + "^" + std::to_string(e);
        left -= e;
      }
      poly += (t ? "+" : "") + term;
    }
    text += "gen " + poly + "\n";
  }
  return text;
}

/// Reference CRT by exhaustive search; only for tiny moduli.
inline std::int64_t brute_crt(const std::vector<std::int64_t>& r, const std::vector<std::int64_t>& m) {
  std::int64_t n = 1;
  for (auto x : m) n *= x;
  for (std::int64_t c = 0; c < n; ++c) {
    bool ok = true;
    for (std::size_t i = 0; i < m.size() && ok; ++i) ok = c % m[i] == r[i];
    if (ok) return c;
  }
  return -1;
}

/// Reference rational reconstruction by exhaustive search over b.
inline std::optional<Rational> brute_farey(std::int64_t c, std::int64_t n) {
  std::int64_t bound = 0;
  while ((bound + 1) * (bound + 1) <= n / 2) ++bound;
  std::optional<Rational> found;
  for (std::int64_t b = 1; b <= bound; ++b) {
    std::int64_t a = (c * b) % n;
    for (std::int64_t cand : {a, a - n}) {
      if (std::abs(cand) <= bound && std::gcd(std::abs(cand), b) == 1) {
        const Rational q = make_rational(cand, b);
        if (found && *found != q) return std::nullopt;  // not unique: cannot happen
        found = q;
      }
    }
  }
  return found;
}

/// Irreducibility over F_p by Rabin's test (x^(p^d) = x mod g, and
/// gcd(x^(p^(d/q)) - x, g) = 1 for every prime q | d), written against
/// the generic polynomial primitives only.
inline bool rabin_irreducible(const UniPolyP& g) {
  const PrimeField& k = g.field();
  const int d = g.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const UniPolyP x = UniPolyP::monomial(k, 1, 1);
  auto frob = [&](int times) {
    UniPolyP r = x;
    for (int i = 0; i < times; ++i) r = pow_mod(r, k.characteristic(), g);
    return r;
  };
  if (!(rem(frob(d) - x, g).is_zero())) return false;
  for (int q = 2; q <= d; ++q) {
    if (d % q) continue;
    bool prime = true;
    for (int s = 2; s * s <= q; ++s) prime = prime && q % s;
    if (!prime) continue;
    if (gcd(frob(d / q) - x, g).degree() != 0) return false;
  }
  return true;
}

/// Irreducibility over a small F_p by trial division by every monic
/// polynomial of degree <= deg/2.
inline bool brute_irreducible(const UniPolyP& g) {
  const PrimeField& k = g.field();
  const std::uint32_t p = k.characteristic();
  const int d = g.degree();
  for (int e = 1; 2 * e <= d; ++e) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(e) + 1, 0);
    c[static_cast<std::size_t>(e)] = 1;
    for (;;) {
      if (rem(g, UniPolyP(k, c)).is_zero()) return false;
      std::size_t i = 0;
      while (i < static_cast<std::size_t>(e) && ++c[i] == p) c[i++] = 0;
      if (i == static_cast<std::size_t>(e)) break;
    }
  }
  return d >= 1;
}

inline std::vector<std::string> texts(const std::vector<PolyP>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format(p));
  return out;
}

template <CoefficientField F>
std::vector<std::string> texts(const GroebnerBasis<F>& g) {
  return g.to_strings();
}

/// Parses `polys` (one per entry) over F_p in the given variables and order.
inline std::vector<PolyP> polys_mod_p(const std::vector<std::string>& names, MonomialOrder order,
                                      std::uint32_t p, const std::vector<std::string>& polys) {
  RingQ rq = make_ring(RationalField{}, names, order);
  RingP rp = ring_mod_p(rq, p);
  std::vector<PolyP> out;
  for (const auto& s : polys) out.push_back(map_mod_p(parse_polynomial(s, rq), rp));
  return out;
}

inline std::vector<PolyQ> polys_q(const RingQ& ring, const std::vector<std::string>& polys) {
  std::vector<PolyQ> out;
  for (const auto& s : polys) out.push_back(parse_polynomial(s, ring));
  return out;
}

template <CoefficientField F>
bool all_reduce_to_zero(std::span<const MultiPoly<F>> gens, std::span<const MultiPoly<F>> G) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](const MultiPoly<F>& g) { return normal_form(g, G).is_zero(); });
}

}  // namespace anfgb::testing

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<std::vector<std::string>> {
  static String convert(const std::vector<std::string>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
    return (out + "}").c_str();
  }
};
}  // namespace doctest
#endif
