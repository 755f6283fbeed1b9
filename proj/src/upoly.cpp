#include "anfgb/upoly.hpp"

namespace anfgb {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 31)) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not a prime below 2^31");
  }
}

std::string PrimeField::format(Elem a) const {
  if (a > p_ / 2) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

UniPolyP map_mod_p(const UniPolyQ& a, const PrimeField& field) {
  std::vector<PrimeField::Elem> c;
  c.reserve(a.coeffs().size());
  for (const auto& q : a.coeffs()) c.push_back(field.from_rational(q));
  return UniPolyP(field, std::move(c));
}

bool canonical_less(const UniPolyP& a, const UniPolyP& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                      b.coeffs().begin(), b.coeffs().end());
}

namespace {

using Elem = PrimeField::Elem;

UniPolyP x_poly(const PrimeField& k) { return UniPolyP::monomial(k, k.one(), 1); }

/// a^p for a in F_p[t]/(m): a(t)^p = a(t^p) since coefficients are fixed by
/// Frobenius, but for large p plain square-and-multiply is simpler.
UniPolyP frobenius(const UniPolyP& a, const UniPolyP& m) {
  return pow_mod(a, m.field().characteristic(), m);
}

/// For f with f' = 0, f = g(t^p); returns g.
UniPolyP pth_root(const UniPolyP& f) {
  const PrimeField& k = f.field();
  const std::size_t p = k.characteristic();
  std::vector<Elem> r;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(f.coeffs()[i]);
  return UniPolyP(k, std::move(r));
}

void squarefree_decompose(const UniPolyP& f, int scale, FactorList& out) {
  if (f.degree() < 1) return;
  const UniPolyP fd = derivative(f);
  if (fd.is_zero()) {
    squarefree_decompose(pth_root(f), scale * static_cast<int>(f.field().characteristic()), out);
    return;
  }
  UniPolyP c = gcd(f, fd);
  UniPolyP w = divrem(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    UniPolyP y = gcd(w, c);
    UniPolyP z = divrem(w, y).first;
    if (z.degree() > 0) out.push_back({monic(z), i * scale});
    ++i;
    w = std::move(y);
    c = divrem(c, w).first;
  }
  if (c.degree() > 0) {
    squarefree_decompose(pth_root(c), scale * static_cast<int>(f.field().characteristic()), out);
  }
}

/// Splits squarefree monic f into products of equal-degree irreducibles.
std::vector<std::pair<UniPolyP, int>> distinct_degree(UniPolyP f) {
  const PrimeField& k = f.field();
  std::vector<std::pair<UniPolyP, int>> out;
  UniPolyP h = x_poly(k);
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = frobenius(h, f);
    UniPolyP g = gcd(h - x_poly(k), f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = divrem(f, g).first;
      h = rem(h, f);
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

UniPolyP random_poly(const PrimeField& k, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, k.characteristic() - 1);
  std::vector<Elem> c(static_cast<std::size_t>(below_degree));
  for (auto& x : c) x = dist(rng);
  return UniPolyP(k, std::move(c));
}

/// Cantor-Zassenhaus splitting of f, a product of irreducibles of degree d.
void equal_degree(const UniPolyP& f, int d, std::mt19937_64& rng, std::vector<UniPolyP>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const PrimeField& k = f.field();
  const std::uint64_t p = k.characteristic();
  for (;;) {
    UniPolyP a = random_poly(k, f.degree(), rng);
    if (a.degree() < 1) continue;
    UniPolyP b(k);
    if (p == 2) {
      // Absolute trace a + a^2 + ... + a^(2^(d-1)) lands in F_2.
      UniPolyP term = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        term = rem(term * term, f);
        b += term;
      }
    } else {
      // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
      UniPolyP conj = a;
      UniPolyP norm = a;
      for (int i = 1; i < d; ++i) {
        conj = frobenius(conj, f);
        norm = rem(norm * conj, f);
      }
      b = pow_mod(norm, (p - 1) / 2, f) - UniPolyP::constant(k, k.one());
    }
    UniPolyP g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(divrem(f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool has_frobenius_certificate(const UniPolyP& g) {
  if (g.degree() < 1) return false;
  const PrimeField& k = g.field();
  UniPolyP h = x_poly(k);
  for (int i = 0; i < g.degree(); ++i) h = frobenius(h, g);
  return h == rem(x_poly(k), g);
}

FactorList factor(const UniPolyP& a, std::uint64_t seed) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor of 0");
  std::mt19937_64 rng(seed);
  FactorList squarefree;
  squarefree_decompose(monic(a), 1, squarefree);

  FactorList out;
  for (const auto& [part, mult] : squarefree) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<UniPolyP> pieces;
      equal_degree(block, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({monic(piece), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) {
    return canonical_less(x.factor, y.factor);
  });
  return out;
}

}  // namespace anfgb
