#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "anfgb/modular.hpp"
#include "anfgb/numberfield.hpp"

namespace anfgb {

/// An ideal of Q(a)[X]. Generators are stored over Q in the variables X
/// followed by the algebraic symbol a, with a-degree below deg f.
struct Problem {
  std::vector<std::string> vars;
  std::string minvar;
  UniPolyQ minpoly;
  BaseOrder order = BaseOrder::DegRevLex;
  RingQ ring;
  std::vector<PolyQ> generators;

  NumberField field() const { return NumberField(minpoly, minvar); }
  /// K[X] under the user's order.
  RingK ring_k() const;
  std::vector<PolyK> generators_k(const RingK& ring) const;
};

/// Line-oriented input:
///   vars x y
///   minvar a
///   minpoly a^2+1
///   order degrevlex        (or lex; optional, default degrevlex)
///   gen x^2+a*y            (one per generator)
/// `#` starts a comment. Polynomials use + - * / ^ and parentheses, with
/// explicit `*`; division only by nonzero rational constants.
Problem parse_problem(std::string_view text);

/// Parses one polynomial over the problem ring (vars then minvar).
PolyQ parse_polynomial(std::string_view text, const RingQ& ring);

/// a -> t; the product order puts every X-monomial above every power of t.
TaggedIdeal to_tagged(const Problem& problem);

/// Drops f from a reduced basis of the tagged ideal and substitutes t -> a.
GroebnerBasis<NumberField> lift_to_K(const GroebnerBasis<RationalField>& tagged,
                                     const Problem& problem);

struct NfResult {
  GroebnerBasis<NumberField> basis;
  GroebnerBasis<RationalField> tagged;
  ModularStats stats;
};

/// Reduced Groebner basis of the problem's ideal over Q(a) via the
/// two-level modular algorithm.
NfResult nfmodstd(const Problem& problem, const ModularConfig& config = {});

/// Direct Buchberger over Q[t]/<f>; the reference the modular route is
/// checked against.
GroebnerBasis<NumberField> buchberger_direct(const Problem& problem);

/// {basis: [[term...]...], minpoly, vars}; each term carries exponents, the
/// coefficient as text in `alpha_poly`, and the exact rational coefficients
/// of its powers of a in `coeff_num` / `coeff_den`.
std::string to_json(const GroebnerBasis<NumberField>& basis, const Problem& problem);

/// One polynomial per line, increasing leading monomial.
std::string to_text(const GroebnerBasis<NumberField>& basis);

}  // namespace anfgb
