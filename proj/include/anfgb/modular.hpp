#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "anfgb/groebner.hpp"
#include "anfgb/primes.hpp"
#include "anfgb/upoly.hpp"

namespace anfgb {

/// <H, f> in Q[X, t] under the product ordering (order on X, then degree on
/// t). t is the last variable of `ring`.
struct TaggedIdeal {
  RingQ ring;
  std::vector<PolyQ> gens;
  UniPolyQ minpoly;

  std::size_t tag() const { return ring->nvars() - 1; }
  /// Every rational coefficient of f and H; admissible primes avoid them all.
  std::vector<Rational> coefficients() const;
  /// f embedded as a polynomial in t.
  PolyQ minpoly_poly() const;
};

/// f(t) as an element of a ring whose last variable is t.
template <CoefficientField F>
MultiPoly<F> embed_in_tag(const UniPoly<F>& f, const RingPtr<F>& ring) {
  std::vector<Term<F>> terms;
  const std::size_t n = ring->nvars();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    Monomial m(n);
    m.set(n - 1, static_cast<unsigned>(i));
    terms.push_back({m, f.coeffs()[i]});
  }
  return MultiPoly<F>::from_terms(ring, std::move(terms));
}

/// Distinct Q[t]-coefficients of g, viewed in (Q[t])[X], of t-degree >= 1.
std::vector<UniPolyQ> compute_Sg(const PolyQ& g);

bool is_admissible_type_B_weak(const UniPolyQ& f, std::span<const PolyQ> H, std::uint32_t p);

enum class Verdict { Ok, TypeBFailed };

struct PrimeSnapshot {
  std::uint32_t prime = 0;
  RingP ring;
  FactorList factors;
  std::vector<GroebnerBasis<PrimeField>> per_factor;
  std::optional<GroebnerBasis<PrimeField>> combined;
  Verdict verdict = Verdict::TypeBFailed;
};

/// Equal sizes and equal leading-monomial sets (after removing the
/// factor itself) across all per-factor bases.
Verdict check_type_B_strong(const PrimeSnapshot& snapshot);

/// Coefficient-wise polynomial CRA over the matched elements of the
/// per-factor bases, with f_p appended. Requires a strong type-B pass.
GroebnerBasis<PrimeField> combine_factor_bases(const PrimeSnapshot& snapshot);

/// Factor f_p, compute the reduced basis of <H_p, f_{i,p}> for every factor
/// and, when the strong type-B test passes, recombine.
PrimeSnapshot gp_for_prime(const TaggedIdeal& ideal, std::uint32_t p, std::uint64_t seed,
                           bool allow_irreducible = false);

/// Same as gp_for_prime but with explicit factors, skipping factorization.
PrimeSnapshot gp_for_factors(const TaggedIdeal& ideal, std::uint32_t p, FactorList factors);

/// Ok snapshots grouped by leading-monomial class; a class's weight is the
/// number of primes it holds.
class ResultPool {
public:
  struct Entry {
    std::uint32_t prime;
    GroebnerBasis<PrimeField> basis;
  };

  void add(std::uint32_t prime, GroebnerBasis<PrimeField> basis);
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::vector<std::uint32_t> primes() const;
  /// Number of distinct leading-monomial classes.
  std::size_t class_count() const;

private:
  std::vector<Entry> entries_;
};

/// Keeps only the class of largest weight; ties go to the class holding
/// the smallest prime. Throws EmptyPool.
ResultPool delete_unlucky(const ResultPool& pool);

/// Integer CRT then Farey map, coefficient by coefficient, into `ring`.
/// Throws NoReconstruction when the modulus is too small.
GroebnerBasis<RationalField> lift_to_rationals(const ResultPool& pool, const RingQ& ring);

struct PTestResult {
  bool passed = false;
  std::uint32_t prime = 0;
  std::optional<PrimeSnapshot> snapshot;
};

/// Verifies a candidate at a fresh type-B admissible prime outside `used`:
/// the generators of the ideal reduce to zero mod the candidate, and the
/// candidate reduces to zero mod the prime's recombined basis.
PTestResult p_test_detailed(const TaggedIdeal& ideal, std::span<const PolyQ> candidate,
                            const std::set<std::uint32_t>& used, std::uint64_t seed,
                            bool allow_irreducible = false, std::size_t retries = 20);

bool p_test(const TaggedIdeal& ideal, std::span<const PolyQ> candidate,
            const std::set<std::uint32_t>& used, std::uint64_t seed);

struct ModularConfig {
  /// 0 picks 10, or 25 with 32 or more workers.
  std::size_t initial_primes = 0;
  std::size_t max_rounds = 16;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  bool allow_irreducible = false;
  bool weak_prefilter = true;
  std::size_t candidate_cap = kDefaultCandidateCap;
  std::size_t ptest_retries = 20;
};

struct ModularStats {
  std::size_t rounds = 0;
  std::size_t primes_tried = 0;
  std::size_t type_b_rejected = 0;
  std::size_t unlucky_deleted = 0;
  std::size_t primes_in_lift = 0;
};

struct ModularResult {
  GroebnerBasis<RationalField> basis;
  ModularStats stats;
};

/// The two-level modular algorithm: returns the reduced Groebner basis of
/// <H, f> w.r.t. the product ordering (probabilistic; see README).
/// Throws RoundLimitExceeded or ExhaustedCandidates.
ModularResult modular_gb(const TaggedIdeal& ideal, const ModularConfig& config = {});

/// f is a member and every other element is monic in (Q[t])[X]: its
/// leading X-monomial has coefficient exactly 1 in Q[t].
bool has_tagged_structure(const GroebnerBasis<RationalField>& basis, const UniPolyQ& f);

}  // namespace anfgb
