#include <doctest.h>

#include "support.hpp"

using namespace anfgb;
using namespace anfgb::testing;

namespace {

Problem problem(const std::string& gens, const std::string& minpoly = "a^2+1",
                const std::string& vars = "x y") {
  std::string text = "vars " + vars + "\nminvar a\nminpoly " + minpoly + "\norder degrevlex\n";
  std::size_t start = 0;
  while (start < gens.size()) {
    std::size_t end = gens.find(';', start);
    if (end == std::string::npos) end = gens.size();
    text += "gen " + gens.substr(start, end - start) + "\n";
    start = end + 1;
  }
  return parse_problem(text);
}

FactorList factors_mod(std::uint32_t p, const std::vector<std::vector<long>>& polys) {
  const PrimeField k(p);
  FactorList out;
  for (const auto& c : polys) {
    std::vector<std::uint32_t> v;
    for (long x : c) v.push_back(k.from_int(x));
    out.push_back({UniPolyP(k, std::move(v)), 1});
  }
  return out;
}

using Strings = std::vector<std::string>;

const Strings kWorkedTagged{"t^2+1", "y^2+x*t+y*t", "x*y+x*t+1", "x^2+y*t"};

}  // namespace

TEST_CASE("compute_Sg") {
  const TaggedIdeal j = to_tagged(problem("x^2+x*y+a;a^2*x+y", "a^3+a+1"));
  auto s = compute_Sg(j.gens[1]);
  REQUIRE(s.size() == 1);
  CHECK(format(s[0], "t") == "t^2");
  const TaggedIdeal h = to_tagged(problem("x+y+a-1", "a^3+a+1"));
  s = compute_Sg(h.gens[0]);
  REQUIRE(s.size() == 1);
  CHECK(format(s[0], "t") == "t-1");
  CHECK(compute_Sg(to_tagged(problem("x+2*y")).gens[0]).empty());
}

TEST_CASE("type-A admissibility of t^2+1") {
  UniPolyQ f(RationalField{}, {1, 0, 1});
  CHECK(is_admissible_type_A(f, 5));
  CHECK(is_admissible_type_A(f, 13));
  CHECK_FALSE(is_admissible_type_A(f, 2));
  CHECK_FALSE(is_admissible_type_A(f, 3));
  CHECK(is_admissible_type_A(f, 3, true));
  UniPolyQ g(RationalField{}, {make_rational(1, 7), 0, 1});
  CHECK_FALSE(is_admissible_type_A(g, 7));
}

TEST_CASE("weak type-B test on the counterexample ideals at p = 3") {
  const TaggedIdeal j = to_tagged(problem("x^2+x*y+a;x+y+a-1", "a^3+a+1"));
  const TaggedIdeal j1 = to_tagged(problem("x^2+x*y+a;a^2*x+y", "a^3+a+1"));
  CHECK_FALSE(is_admissible_type_B_weak(j.minpoly, j.gens, 3));
  CHECK(is_admissible_type_B_weak(j1.minpoly, j1.gens, 3));
  const TaggedIdeal plain = to_tagged(problem("x^2+y;x*y-1"));
  CHECK(is_admissible_type_B_weak(plain.minpoly, plain.gens, 5));
}

TEST_CASE("strong type-B rejects J, J' and J'' at p = 3") {
  // f = t^3+t+1 = (t-1)(t^2+t-1) mod 3
  const FactorList fac = factors_mod(3, {{-1, 1}, {-1, 1, 1}});
  REQUIRE(factor(map_mod_p(UniPolyQ(RationalField{}, {1, 1, 0, 1}), PrimeField(3)), 1).size() == 2);

  SUBCASE("J: sizes differ") {
    const PrimeSnapshot s = gp_for_factors(to_tagged(problem("x^2+x*y+a;x+y+a-1", "a^3+a+1")), 3, fac);
    REQUIRE(s.per_factor.size() == 2);
    CHECK(texts(s.per_factor[0]) == Strings{"1"});
    CHECK(texts(s.per_factor[1]) == Strings{"t^2+t-1", "y+1", "x+t+1"});
    CHECK(s.verdict == Verdict::TypeBFailed);
    CHECK_FALSE(s.combined.has_value());
  }
  SUBCASE("J': sizes differ though the weak test passes") {
    const PrimeSnapshot s = gp_for_factors(to_tagged(problem("x^2+x*y+a;a^2*x+y", "a^3+a+1")), 3, fac);
    CHECK(texts(s.per_factor[0]) == Strings{"1"});
    // Substituting x = y/(t-1) = y*(1-t) in F_9 = F_3[t]/<t^2+t-1> gives
    // x+y*t-y and y^2 = 1.
    CHECK(texts(s.per_factor[1]) == Strings{"t^2+t-1", "x+y*t-y", "y^2-1"});
    CHECK(s.verdict == Verdict::TypeBFailed);
    CHECK_FALSE(s.combined.has_value());
  }
  SUBCASE("J'': equal sizes, different leading monomials") {
    const TaggedIdeal ideal = to_tagged(problem("x^2+x*y+a;a*x+y+a", "a^3+a+1"));
    const PrimeSnapshot s = gp_for_factors(ideal, 3, fac);
    CHECK(texts(s.per_factor[0]) == Strings{"t-1", "y-1", "x-1"});
    // 1/t = t+1 in F_9, so x = -(y+t)(t+1) = -(y*t+y+1); substituting into
    // x^2+x*y+t leaves y^2-y*t+y+t+1. Leading monomials {x, y^2} either way.
    CHECK(texts(s.per_factor[1]) == Strings{"t^2+t-1", "x+y*t+y+1", "y^2-y*t+y+t+1"});
    CHECK(s.per_factor[0].size() == s.per_factor[1].size());
    CHECK(check_type_B_strong(s) == Verdict::TypeBFailed);
    CHECK(s.verdict == Verdict::TypeBFailed);
    CHECK_FALSE(s.combined.has_value());
    CHECK_THROWS_AS(combine_factor_bases(s), Error);

    // The bad recombination must not come out of the full pipeline either.
    const std::string bad = "y^2*t^2+y^2*t-y^2+y*t^2+y*t+t^2+t+1";
    const ModularResult r = modular_gb(ideal);
    for (const auto& g : r.basis.polys) CHECK(format(g) != bad);
    CHECK(r.basis.polys == buchberger(ideal.ring, [&] {
      auto g = ideal.gens;
      g.push_back(ideal.minpoly_poly());
      return g;
    }()).polys);
  }
}

TEST_CASE("worked example: per-factor bases at 5 and 13, recombination and lift") {
  const TaggedIdeal ideal = to_tagged(problem("x^2+a*y;a*x*y-x+a"));

  const PrimeSnapshot s5 = gp_for_factors(ideal, 5, factors_mod(5, {{-2, 1}, {2, 1}}));
  REQUIRE(s5.per_factor.size() == 2);
  CHECK(texts(s5.per_factor[0]) == Strings{"t-2", "y^2+2*x+2*y", "x*y+2*x+1", "x^2+2*y"});
  CHECK(texts(s5.per_factor[1]) == Strings{"t+2", "y^2-2*x-2*y", "x*y-2*x+1", "x^2-2*y"});
  CHECK(check_type_B_strong(s5) == Verdict::Ok);
  REQUIRE(s5.combined.has_value());
  CHECK(texts(*s5.combined) == kWorkedTagged);

  // Over F_13, t^2+1 = (t-5)(t+5); each factor basis is the Q basis at t = -+5.
  const PrimeSnapshot s13 = gp_for_factors(ideal, 13, factors_mod(13, {{-5, 1}, {5, 1}}));
  CHECK(texts(s13.per_factor[0]) == Strings{"t-5", "y^2+5*x+5*y", "x*y+5*x+1", "x^2+5*y"});
  CHECK(texts(s13.per_factor[1]) == Strings{"t+5", "y^2-5*x-5*y", "x*y-5*x+1", "x^2-5*y"});
  REQUIRE(s13.combined.has_value());
  CHECK(texts(*s13.combined) == kWorkedTagged);

  // gp_for_prime factors on its own and lands on the same snapshot.
  const PrimeSnapshot auto5 = gp_for_prime(ideal, 5, 99);
  CHECK(texts(*auto5.combined) == kWorkedTagged);
  CHECK_THROWS_AS(gp_for_prime(ideal, 3, 99), Error);  // not type-A

  ResultPool pool;
  pool.add(5, *s5.combined);
  pool.add(13, *s13.combined);
  CHECK(delete_unlucky(pool).size() == 2);
  const auto lifted = lift_to_rationals(pool, ideal.ring);
  CHECK(texts(lifted) == kWorkedTagged);
  CHECK(has_tagged_structure(lifted, ideal.minpoly));
}

TEST_CASE("combined basis agrees with each factor basis modulo that factor") {
  const Problem probs[] = {problem("x^2+a*y;a*x*y-x+a"),
                           problem("x^2-a*y+1;y^3+x-a", "a^3-2"),
                           problem("x*y+a;y^2-a*x+1", "a^2-a-1")};
  for (const auto& pr : probs) {
    const TaggedIdeal ideal = to_tagged(pr);
    int checked = 0;
    for (std::uint32_t p : admissible_among(ideal.minpoly, ideal.coefficients(),
                                            std::vector<std::uint32_t>{31, 37, 41, 43, 47, 53, 59, 61, 67, 71})) {
      const PrimeSnapshot s = gp_for_prime(ideal, p, 7);
      if (s.verdict != Verdict::Ok) continue;
      ++checked;
      const RingP& rp = s.ring;
      for (std::size_t i = 0; i < s.factors.size(); ++i) {
        const PolyP fi = embed_in_tag(s.factors[i].factor, rp);
        std::vector<PolyP> mod{fi};
        std::vector<PolyP> rest;
        for (const auto& g : s.per_factor[i].polys) {
          if (!(g == fi)) rest.push_back(g);
        }
        std::size_t k = 0;
        for (const auto& g : s.combined->polys) {
          if (g.lm()[rp->nvars() - 1] != 0) continue;  // f_p
          REQUIRE(k < rest.size());
          CHECK(normal_form(g - rest[k], mod).is_zero());
          ++k;
        }
        CHECK(k == rest.size());
      }
      // Single-prime sanity check: direct basis of <H_p, f_p>.
      std::vector<PolyP> hp;
      for (const auto& g : ideal.gens) hp.push_back(map_mod_p(g, rp));
      hp.push_back(map_mod_p(ideal.minpoly_poly(), rp));
      CHECK(s.combined->polys == buchberger(rp, hp).polys);
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("delete_unlucky: weight, then smallest prime") {
  const std::vector<std::string> names{"x", "t"};
  const auto order = MonomialOrder::product(BaseOrder::DegRevLex, 1);
  auto basis = [&](std::uint32_t p, const Strings& polys) {
    RingP rp = ring_mod_p(make_ring(RationalField{}, names, order), p);
    return GroebnerBasis<PrimeField>{rp, polys_mod_p(names, order, p, polys)};
  };
  ResultPool pool;
  CHECK_THROWS_AS(delete_unlucky(pool), Error);
  pool.add(101, basis(101, {"t^2+1", "x+t"}));
  pool.add(103, basis(103, {"t^2+1", "x^2+1"}));
  pool.add(107, basis(107, {"t^2+1", "x+t"}));
  CHECK(pool.class_count() == 2);
  ResultPool kept = delete_unlucky(pool);
  CHECK(kept.primes() == std::vector<std::uint32_t>{101, 107});

  ResultPool tie;
  tie.add(109, basis(109, {"t^2+1", "x+t"}));
  tie.add(103, basis(103, {"t^2+1", "x^2+1"}));
  CHECK(delete_unlucky(tie).primes() == std::vector<std::uint32_t>{103});
}

TEST_CASE("lift_to_rationals: 33 mod 65 is 1/2, and a too-small modulus fails") {
  const std::vector<std::string> names{"x", "t"};
  const auto order = MonomialOrder::product(BaseOrder::DegRevLex, 1);
  RingQ rq = make_ring(RationalField{}, names, order);
  ResultPool pool;
  for (std::uint32_t p : {5u, 13u}) {
    RingP rp = ring_mod_p(rq, p);
    pool.add(p, GroebnerBasis<PrimeField>{rp, polys_mod_p(names, order, p, {"x+1/2"})});
  }
  CHECK(texts(lift_to_rationals(pool, rq)) == Strings{"x+1/2"});

  ResultPool small;
  RingP r5 = ring_mod_p(rq, 5);
  small.add(5, GroebnerBasis<PrimeField>{r5, polys_mod_p(names, order, 5, {"x+2"})});
  try {
    lift_to_rationals(small, rq);  // 2 mod 5 has no reconstruction with |a|, b <= 1
    FAIL("expected NoReconstruction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoReconstruction);
  }
}

TEST_CASE("p_test on the worked example") {
  const TaggedIdeal ideal = to_tagged(problem("x^2+a*y;a*x*y-x+a"));
  const auto good = polys_q(ideal.ring, kWorkedTagged);
  const std::set<std::uint32_t> used{5, 13};
  CHECK(p_test(ideal, good, used, 1));
  // 17 splits t^2+1 as (t-4)(t+4); explicitly check that prime.
  const PrimeSnapshot s17 = gp_for_prime(ideal, 17, 1);
  REQUIRE(s17.verdict == Verdict::Ok);
  CHECK(texts(*s17.combined) == kWorkedTagged);
  auto bad = good;
  bad[2] = parse_polynomial("x*y+x*t+2", ideal.ring);
  CHECK_FALSE(p_test(ideal, bad, used, 1));
  const PTestResult r = p_test_detailed(ideal, good, used, 1);
  CHECK(r.passed);
  CHECK(r.prime != 0);
  CHECK_FALSE(used.contains(r.prime));
}

TEST_CASE("modular_gb end to end") {
  const TaggedIdeal ideal = to_tagged(problem("x^2+a*y;a*x*y-x+a"));
  const ModularResult r = modular_gb(ideal);
  CHECK(texts(r.basis) == kWorkedTagged);
  CHECK(has_tagged_structure(r.basis, ideal.minpoly));
  CHECK(r.stats.primes_in_lift >= 1);

  ModularConfig many;
  many.workers = 4;
  CHECK(modular_gb(ideal, many).basis.polys == r.basis.polys);

  CHECK(texts(modular_gb(to_tagged(problem("x;x+1"))).basis) == Strings{"1"});
  CHECK(texts(modular_gb(to_tagged(problem("x"))).basis) == Strings{"t^2+1", "x"});
}

TEST_CASE("modular_gb error paths") {
  const TaggedIdeal big = to_tagged(problem("x-123456789012345678901234567/987654321098765432109*a;y"));
  ModularConfig one;
  one.initial_primes = 1;
  one.max_rounds = 1;
  try {
    modular_gb(big, one);
    FAIL("expected RoundLimitExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RoundLimitExceeded);
  }
  ModularConfig enough;
  CHECK(modular_gb(big, enough).basis.size() == 3);

  ModularConfig capped;
  capped.candidate_cap = 1;
  capped.seed = 3;
  try {
    modular_gb(to_tagged(problem("x^2+a*y;a*x*y-x+a")), capped);
    FAIL("expected ExhaustedCandidates");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ExhaustedCandidates);
  }
}

TEST_CASE("has_tagged_structure rejects a non-monic element and a missing f") {
  const TaggedIdeal ideal = to_tagged(problem("x^2+a*y"));
  CHECK_FALSE(has_tagged_structure({ideal.ring, polys_q(ideal.ring, {"t^2+1", "x*t+1"})}, ideal.minpoly));
  CHECK_FALSE(has_tagged_structure({ideal.ring, polys_q(ideal.ring, {"x+1"})}, ideal.minpoly));
  CHECK_FALSE(has_tagged_structure({ideal.ring, polys_q(ideal.ring, {"t^2+1", "x+x*t"})}, ideal.minpoly));
  CHECK(has_tagged_structure({ideal.ring, polys_q(ideal.ring, {"1"})}, ideal.minpoly));
}
