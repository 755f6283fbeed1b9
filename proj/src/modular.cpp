#include "anfgb/modular.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <thread>

namespace anfgb {

namespace {

Monomial x_part(const Monomial& m, std::size_t tag) {
  Monomial r = m;
  r.set(tag, 0);
  return r;
}

struct MonomialGreater {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

/// The Q[t] (or F_p[t]) coefficients of g grouped by X-monomial, in
/// decreasing X order.
template <CoefficientField F>
std::map<Monomial, std::vector<typename F::Elem>, MonomialGreater> split_by_x(
    const MultiPoly<F>& g) {
  const std::size_t tag = g.ring()->nvars() - 1;
  std::map<Monomial, std::vector<typename F::Elem>, MonomialGreater> out(
      MonomialGreater{&g.ring()->order});
  for (const auto& t : g.terms()) {
    auto& coeffs = out[x_part(t.mono, tag)];
    const std::size_t d = t.mono[tag];
    if (coeffs.size() <= d) coeffs.resize(d + 1, g.field().zero());
    coeffs[d] = t.coef;
  }
  return out;
}

bool weak_type_B(std::span<const PolyQ> H, const FactorList& factors, const PrimeField& k) {
  for (const auto& g : H) {
    for (const auto& s : compute_Sg(g)) {
      const UniPolyP sp = map_mod_p(s, k);
      for (const auto& fac : factors) {
        if (rem(sp, fac.factor).is_zero()) return false;
      }
    }
  }
  return true;
}

/// The per-factor basis without its own factor, sorted by increasing lm.
std::vector<PolyP> strip_factor(const GroebnerBasis<PrimeField>& basis, const UniPolyP& factor) {
  const PolyP fpoly = embed_in_tag(factor, basis.ring);
  std::vector<PolyP> out;
  for (const auto& g : basis.polys) {
    if (!(g == fpoly)) out.push_back(g);
  }
  return out;
}

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, std::size_t workers, Fn fn) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace

std::vector<Rational> TaggedIdeal::coefficients() const {
  std::vector<Rational> out = minpoly.coeffs();
  for (const auto& g : gens) {
    for (const auto& t : g.terms()) out.push_back(t.coef);
  }
  return out;
}

PolyQ TaggedIdeal::minpoly_poly() const { return embed_in_tag(minpoly, ring); }

std::vector<UniPolyQ> compute_Sg(const PolyQ& g) {
  std::vector<UniPolyQ> out;
  if (g.is_zero()) return out;
  for (auto& [mono, coeffs] : split_by_x(g)) {
    UniPolyQ c(RationalField{}, std::move(coeffs));
    if (c.degree() < 1) continue;
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

bool is_admissible_type_B_weak(const UniPolyQ& f, std::span<const PolyQ> H, std::uint32_t p) {
  if (!is_admissible_type_A(f, p)) return false;
  for (const auto& g : H) {
    std::vector<Rational> coeffs;
    for (const auto& t : g.terms()) coeffs.push_back(t.coef);
    if (divides_any(p, coeffs)) return false;
  }
  const PrimeField k(p);
  return weak_type_B(H, factor(map_mod_p(f, k), mix_seed(p, 1)), k);
}

Verdict check_type_B_strong(const PrimeSnapshot& snapshot) {
  const auto& bases = snapshot.per_factor;
  if (bases.empty() || bases.size() != snapshot.factors.size()) return Verdict::TypeBFailed;
  std::vector<std::vector<Monomial>> lms;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i].size() != bases[0].size()) return Verdict::TypeBFailed;
    std::vector<Monomial> l;
    for (const auto& g : strip_factor(bases[i], snapshot.factors[i].factor)) l.push_back(g.lm());
    lms.push_back(std::move(l));
  }
  for (const auto& l : lms) {
    if (l != lms[0]) return Verdict::TypeBFailed;
  }
  return Verdict::Ok;
}

GroebnerBasis<PrimeField> combine_factor_bases(const PrimeSnapshot& snapshot) {
  const RingP& ring = snapshot.ring;
  const PrimeField& k = ring->field;
  const std::size_t r = snapshot.factors.size();
  const std::size_t tag = ring->nvars() - 1;

  if (std::all_of(snapshot.per_factor.begin(), snapshot.per_factor.end(),
                  [](const auto& b) { return b.is_unit(); })) {
    return GroebnerBasis<PrimeField>{ring, {PolyP::constant(ring, k.one())}};
  }

  std::vector<UniPolyP> moduli;
  UniPolyP fp = UniPolyP::constant(k, k.one());
  for (const auto& fac : snapshot.factors) {
    moduli.push_back(fac.factor);
    fp = fp * fac.factor;
  }
  const PolyCrt<PrimeField> crt(moduli);

  std::vector<std::vector<PolyP>> stripped;
  for (std::size_t i = 0; i < r; ++i) {
    stripped.push_back(strip_factor(snapshot.per_factor[i], snapshot.factors[i].factor));
  }

  std::vector<PolyP> combined;
  for (std::size_t e = 0; e < stripped[0].size(); ++e) {
    std::map<Monomial, std::vector<UniPolyP>, MonomialGreater> slots(
        MonomialGreater{&ring->order});
    for (std::size_t i = 0; i < r; ++i) {
      const PolyP& g = stripped[i][e];
      if (!(g.lm() == stripped[0][e].lm())) {
        throw Error(ErrorCode::InvalidArgument, "per-factor bases are not type-B compatible");
      }
      for (auto& [xm, coeffs] : split_by_x(g)) {
        auto [it, fresh] = slots.try_emplace(xm, r, UniPolyP(k));
        it->second[i] = UniPolyP(k, std::move(coeffs));
      }
    }
    std::vector<Term<PrimeField>> terms;
    for (const auto& [xm, residues] : slots) {
      const UniPolyP c = crt.combine(residues);
      for (std::size_t d = 0; d < c.coeffs().size(); ++d) {
        if (c.coeffs()[d] == 0) continue;
        Monomial m = xm;
        m.set(tag, static_cast<unsigned>(d));
        terms.push_back({m, c.coeffs()[d]});
      }
    }
    combined.push_back(PolyP::from_terms(ring, std::move(terms)));
  }
  combined.push_back(embed_in_tag(fp, ring));
  sort_by_leading_monomial(combined, ring->order);
  return GroebnerBasis<PrimeField>{ring, std::move(combined)};
}

PrimeSnapshot gp_for_factors(const TaggedIdeal& ideal, std::uint32_t p, FactorList factors) {
  PrimeSnapshot snap;
  snap.prime = p;
  snap.ring = ring_mod_p(ideal.ring, p);
  snap.factors = std::move(factors);
  std::vector<PolyP> Hp;
  for (const auto& g : ideal.gens) Hp.push_back(map_mod_p(g, snap.ring));
  for (const auto& fac : snap.factors) {
    std::vector<PolyP> gens = Hp;
    gens.push_back(embed_in_tag(fac.factor, snap.ring));
    snap.per_factor.push_back(buchberger(snap.ring, gens));
  }
  snap.verdict = check_type_B_strong(snap);
  if (snap.verdict == Verdict::Ok) snap.combined = combine_factor_bases(snap);
  return snap;
}

PrimeSnapshot gp_for_prime(const TaggedIdeal& ideal, std::uint32_t p, std::uint64_t seed,
                           bool allow_irreducible) {
  const PrimeField k(p);
  const std::vector<Rational> coeffs = ideal.coefficients();
  if (divides_any(p, coeffs)) {
    throw Error(ErrorCode::BadPrime, std::to_string(p) + " divides an input coefficient");
  }
  FactorList factors = factor(map_mod_p(ideal.minpoly, k), mix_seed(seed, p));
  const bool squarefree = std::all_of(factors.begin(), factors.end(),
                                      [](const Factor& f) { return f.multiplicity == 1; });
  if (!squarefree || (factors.size() < 2 && !allow_irreducible)) {
    throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not type-A admissible");
  }
  return gp_for_factors(ideal, p, std::move(factors));
}

void ResultPool::add(std::uint32_t prime, GroebnerBasis<PrimeField> basis) {
  entries_.push_back({prime, std::move(basis)});
}

std::vector<std::uint32_t> ResultPool::primes() const {
  std::vector<std::uint32_t> out;
  for (const auto& e : entries_) out.push_back(e.prime);
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> group_by_class(const std::vector<ResultPool::Entry>& entries) {
  std::vector<std::vector<Monomial>> keys;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto key = entries[i].basis.leading_monomials();
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(std::move(key));
      groups.push_back({i});
    } else {
      groups[static_cast<std::size_t>(it - keys.begin())].push_back(i);
    }
  }
  return groups;
}

}  // namespace

std::size_t ResultPool::class_count() const { return group_by_class(entries_).size(); }

ResultPool delete_unlucky(const ResultPool& pool) {
  if (pool.empty()) throw Error(ErrorCode::EmptyPool, "no snapshots to vote on");
  const auto groups = group_by_class(pool.entries());
  auto smallest_prime = [&](const std::vector<std::size_t>& g) {
    std::uint32_t m = UINT32_MAX;
    for (std::size_t i : g) m = std::min(m, pool.entries()[i].prime);
    return m;
  };
  const std::vector<std::size_t>* best = &groups[0];
  for (const auto& g : groups) {
    if (g.size() > best->size() ||
        (g.size() == best->size() && smallest_prime(g) < smallest_prime(*best))) {
      best = &g;
    }
  }
  ResultPool out;
  for (std::size_t i : *best) out.add(pool.entries()[i].prime, pool.entries()[i].basis);
  return out;
}

GroebnerBasis<RationalField> lift_to_rationals(const ResultPool& pool, const RingQ& ring) {
  if (pool.empty()) throw Error(ErrorCode::EmptyPool, "nothing to lift");
  const auto& entries = pool.entries();
  const auto lms = entries[0].basis.leading_monomials();
  for (const auto& e : entries) {
    if (e.basis.leading_monomials() != lms) {
      throw Error(ErrorCode::InvalidArgument, "pool members disagree on leading monomials");
    }
  }
  const std::vector<std::uint32_t> primes = pool.primes();
  const CrtBasis crt(primes);
  const MonomialOrder& order = ring->order;

  std::vector<PolyQ> lifted;
  std::vector<std::uint32_t> residues(primes.size());
  for (std::size_t e = 0; e < lms.size(); ++e) {
    std::vector<Monomial> support;
    for (const auto& entry : entries) {
      for (const auto& t : entry.basis.polys[e].terms()) support.push_back(t.mono);
    }
    std::sort(support.begin(), support.end(),
              [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    support.erase(std::unique(support.begin(), support.end()), support.end());

    std::vector<std::size_t> cursor(entries.size(), 0);
    std::vector<Term<RationalField>> terms;
    for (const auto& m : support) {
      for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& ts = entries[i].basis.polys[e].terms();
        if (cursor[i] < ts.size() && ts[cursor[i]].mono == m) {
          residues[i] = ts[cursor[i]++].coef;
        } else {
          residues[i] = 0;
        }
      }
      Rational q = farey(crt.combine(residues), crt.modulus());
      if (q != 0) terms.push_back({m, std::move(q)});
    }
    lifted.push_back(PolyQ::from_sorted(ring, std::move(terms)));
  }
  return GroebnerBasis<RationalField>{ring, std::move(lifted)};
}

PTestResult p_test_detailed(const TaggedIdeal& ideal, std::span<const PolyQ> candidate,
                            const std::set<std::uint32_t>& used, std::uint64_t seed,
                            bool allow_irreducible, std::size_t retries) {
  std::vector<Rational> avoid = ideal.coefficients();
  for (const auto& g : candidate) {
    for (const auto& t : g.terms()) avoid.push_back(t.coef);
  }
  PrimeGenerator gen(ideal.minpoly, std::move(avoid), seed, kDefaultCandidateCap,
                     allow_irreducible);
  for (std::uint32_t p : used) gen.exclude(p);

  for (std::size_t attempt = 0; attempt < retries; ++attempt) {
    const std::uint32_t p = gen.next();
    PrimeSnapshot snap = gp_for_prime(ideal, p, seed, allow_irreducible);
    if (snap.verdict != Verdict::Ok) continue;

    PTestResult result;
    result.prime = p;
    std::vector<PolyP> mapped;
    for (const auto& g : candidate) mapped.push_back(map_mod_p(g, snap.ring));
    bool ok = true;
    std::vector<PolyQ> ideal_gens = ideal.gens;
    ideal_gens.push_back(ideal.minpoly_poly());
    for (const auto& g : ideal_gens) {
      if (!normal_form(map_mod_p(g, snap.ring), mapped).is_zero()) {
        ok = false;
        break;
      }
    }
    for (std::size_t i = 0; ok && i < mapped.size(); ++i) {
      if (!normal_form(mapped[i], snap.combined->polys).is_zero()) ok = false;
    }
    result.passed = ok;
    result.snapshot = std::move(snap);
    return result;
  }
  throw Error(ErrorCode::ExhaustedCandidates,
              "no type-B admissible test prime after " + std::to_string(retries) + " attempts");
}

bool p_test(const TaggedIdeal& ideal, std::span<const PolyQ> candidate,
            const std::set<std::uint32_t>& used, std::uint64_t seed) {
  return p_test_detailed(ideal, candidate, used, seed).passed;
}

bool has_tagged_structure(const GroebnerBasis<RationalField>& basis, const UniPolyQ& f) {
  if (basis.is_unit()) return true;
  const PolyQ fpoly = embed_in_tag(f, basis.ring);
  const std::size_t tag = basis.ring->nvars() - 1;
  bool found = false;
  for (const auto& g : basis.polys) {
    if (g == fpoly) {
      found = true;
      continue;
    }
    if (g.lm()[tag] != 0 || g.lc() != 1) return false;
    const Monomial lead_x = g.lm();
    for (std::size_t i = 1; i < g.size(); ++i) {
      if (x_part(g.terms()[i].mono, tag) == lead_x) return false;
    }
  }
  return found;
}

ModularResult modular_gb(const TaggedIdeal& ideal, const ModularConfig& config) {
  ModularStats stats;
  const std::size_t workers = std::max<std::size_t>(1, config.workers);
  std::size_t batch = config.initial_primes ? config.initial_primes : (workers >= 32 ? 25 : 10);

  PrimeGenerator gen(ideal.minpoly, ideal.coefficients(), config.seed, config.candidate_cap,
                     config.allow_irreducible);
  std::vector<PolyQ> ideal_gens = ideal.gens;
  ideal_gens.push_back(ideal.minpoly_poly());

  ResultPool pool;
  std::set<std::uint32_t> used;
  for (std::size_t round = 1; round <= config.max_rounds; ++round) {
    stats.rounds = round;
    const std::vector<std::uint32_t> primes = gen.next(batch);
    auto snapshots = parallel_map<PrimeSnapshot>(primes.size(), workers, [&](std::size_t i) {
      const std::uint32_t p = primes[i];
      if (config.weak_prefilter) {
        const PrimeField k(p);
        FactorList factors = factor(map_mod_p(ideal.minpoly, k), mix_seed(config.seed, p));
        if (!weak_type_B(ideal.gens, factors, k)) {
          PrimeSnapshot rejected;
          rejected.prime = p;
          rejected.factors = std::move(factors);
          return rejected;
        }
        return gp_for_factors(ideal, p, std::move(factors));
      }
      return gp_for_prime(ideal, p, config.seed, config.allow_irreducible);
    });
    for (auto& s : snapshots) {
      used.insert(s.prime);
      ++stats.primes_tried;
      if (s.verdict == Verdict::Ok) {
        pool.add(s.prime, std::move(*s.combined));
      } else {
        ++stats.type_b_rejected;
      }
    }
    // Doubling the cumulative prime count.
    batch = used.size();
    if (pool.empty()) continue;

    const std::size_t before = pool.size();
    pool = delete_unlucky(pool);
    stats.unlucky_deleted += before - pool.size();

    std::optional<GroebnerBasis<RationalField>> candidate;
    try {
      candidate = lift_to_rationals(pool, ideal.ring);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoReconstruction) throw;
      continue;
    }

    PTestResult test = p_test_detailed(ideal, candidate->polys, used, mix_seed(config.seed, ~round),
                                       config.allow_irreducible, config.ptest_retries);
    if (test.passed) {
      const bool reduces = std::all_of(ideal_gens.begin(), ideal_gens.end(), [&](const PolyQ& g) {
        return normal_form(g, candidate->polys).is_zero();
      });
      if (reduces && is_reduced_gb(candidate->polys)) {
        stats.primes_in_lift = pool.size();
        return ModularResult{std::move(*candidate), stats};
      }
    }
    if (test.prime != 0) {
      used.insert(test.prime);
      gen.exclude(test.prime);
      ++stats.primes_tried;
    }
    if (test.snapshot && test.snapshot->combined) {
      pool.add(test.prime, std::move(*test.snapshot->combined));
    }
  }
  throw Error(ErrorCode::RoundLimitExceeded,
              "no verified basis after " + std::to_string(config.max_rounds) + " rounds; " +
                  std::to_string(pool.size()) + " primes in pool, " +
                  std::to_string(pool.class_count()) + " leading-monomial classes, " +
                  std::to_string(stats.type_b_rejected) + " type-B rejections");
}

}  // namespace anfgb
