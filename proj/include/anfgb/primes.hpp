#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <unordered_set>
#include <vector>

#include "anfgb/upoly.hpp"

namespace anfgb {

inline constexpr std::size_t kDefaultCandidateCap = 10000;

/// f_p squarefree with at least two irreducible factors (or, with
/// allow_irreducible, any squarefree f_p), and p dividing no numerator or
/// denominator of f.
bool is_admissible_type_A(const UniPolyQ& f, std::uint32_t p, bool allow_irreducible = false);

/// True iff p divides the numerator or denominator of some nonzero value.
bool divides_any(std::uint32_t p, std::span<const Rational> values);

/// Seeded stream of distinct random primes in (2^30, 2^31) that are type-A
/// admissible for f and avoid every numerator/denominator in `avoid`.
class PrimeGenerator {
public:
  PrimeGenerator(UniPolyQ f, std::vector<Rational> avoid, std::uint64_t seed,
                 std::size_t candidate_cap = kDefaultCandidateCap, bool allow_irreducible = false);

  /// Throws ExhaustedCandidates after candidate_cap consecutive rejected
  /// prime candidates.
  std::uint32_t next();
  std::vector<std::uint32_t> next(std::size_t count);

  /// Never hand out p.
  void exclude(std::uint32_t p) { seen_.insert(p); }

  bool admissible(std::uint32_t p) const;

private:
  UniPolyQ f_;
  std::vector<Rational> avoid_;
  std::mt19937_64 rng_;
  std::size_t cap_;
  bool allow_irreducible_;
  std::unordered_set<std::uint32_t> seen_;
};

/// `count` admissible primes, deterministic in seed. count must be >= 1.
std::vector<std::uint32_t> generate_admissible_primes(const UniPolyQ& f,
                                                      std::span<const Rational> avoid,
                                                      std::size_t count, std::uint64_t seed,
                                                      std::size_t candidate_cap = kDefaultCandidateCap);

/// The admissible members of an explicit candidate list, in order.
std::vector<std::uint32_t> admissible_among(const UniPolyQ& f, std::span<const Rational> avoid,
                                            std::span<const std::uint32_t> candidates);

/// splitmix64 finaliser; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace anfgb
