#include "anfgb/primes.hpp"

namespace anfgb {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

bool divides_any(std::uint32_t p, std::span<const Rational> values) {
  for (const auto& q : values) {
    if (q == 0) continue;
    if (mpz_fdiv_ui(q.get_num_mpz_t(), p) == 0 || mpz_fdiv_ui(q.get_den_mpz_t(), p) == 0) {
      return true;
    }
  }
  return false;
}

bool is_admissible_type_A(const UniPolyQ& f, std::uint32_t p, bool allow_irreducible) {
  if (!is_prime(p)) return false;
  if (divides_any(p, f.coeffs())) return false;
  const PrimeField k(p);
  const UniPolyP fp = map_mod_p(f, k);
  if (fp.degree() < 1 || !is_squarefree(fp)) return false;
  if (allow_irreducible) return true;
  return factor(fp, mix_seed(p, 0)).size() >= 2;
}

PrimeGenerator::PrimeGenerator(UniPolyQ f, std::vector<Rational> avoid, std::uint64_t seed,
                               std::size_t candidate_cap, bool allow_irreducible)
    : f_(std::move(f)), avoid_(std::move(avoid)), rng_(seed), cap_(candidate_cap),
      allow_irreducible_(allow_irreducible) {}

bool PrimeGenerator::admissible(std::uint32_t p) const {
  return !divides_any(p, avoid_) && is_admissible_type_A(f_, p, allow_irreducible_);
}

std::uint32_t PrimeGenerator::next() {
  std::uniform_int_distribution<std::uint32_t> dist((1u << 30) + 1, (1u << 31) - 1);
  std::size_t rejected = 0;
  for (;;) {
    const std::uint32_t p = dist(rng_) | 1u;
    if (!is_prime(p) || seen_.contains(p)) continue;
    seen_.insert(p);
    if (admissible(p)) return p;
    if (++rejected >= cap_) {
      throw Error(ErrorCode::ExhaustedCandidates,
                  std::to_string(rejected) + " consecutive prime candidates were not admissible");
    }
  }
}

std::vector<std::uint32_t> PrimeGenerator::next(std::size_t count) {
  std::vector<std::uint32_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next());
  return out;
}

std::vector<std::uint32_t> generate_admissible_primes(const UniPolyQ& f,
                                                      std::span<const Rational> avoid,
                                                      std::size_t count, std::uint64_t seed,
                                                      std::size_t candidate_cap) {
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "prime count must be at least 1");
  PrimeGenerator gen(f, std::vector<Rational>(avoid.begin(), avoid.end()), seed, candidate_cap);
  return gen.next(count);
}

std::vector<std::uint32_t> admissible_among(const UniPolyQ& f, std::span<const Rational> avoid,
                                            std::span<const std::uint32_t> candidates) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p : candidates) {
    if (is_prime(p) && !divides_any(p, avoid) && is_admissible_type_A(f, p)) out.push_back(p);
  }
  return out;
}

}  // namespace anfgb
