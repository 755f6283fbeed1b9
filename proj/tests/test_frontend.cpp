#include <doctest.h>

#include <json.hpp>

#include "support.hpp"

using namespace anfgb;
using namespace anfgb::testing;

namespace {

const char* kWorked =
    "vars x y\nminvar a\nminpoly a^2+1\norder degrevlex\ngen x^2+a*y\ngen a*x*y-x+a\n";

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("to_tagged renames t away from user variables") {
  const Problem p = parse_problem("vars t t_\nminvar a\nminpoly a^2+1\ngen t*a+t_\n");
  const TaggedIdeal ideal = to_tagged(p);
  CHECK(ideal.ring->names == Strings{"t", "t_", "t__"});
  CHECK(format(ideal.gens[0]) == "t*t__+t_");
  CHECK(ideal.tag() == 2);
}

TEST_CASE("lift_to_K") {
  const Problem p = parse_problem(kWorked);
  const TaggedIdeal ideal = to_tagged(p);
  GroebnerBasis<RationalField> tagged{ideal.ring, polys_q(ideal.ring, {"t^2+1", "y^2+x*t+y*t",
                                                                     "x*y+x*t+1", "x^2+y*t"})};
  CHECK(texts(lift_to_K(tagged, p)) == Strings{"y^2+a*x+a*y", "x*y+a*x+1", "x^2+a*y"});
  CHECK(lift_to_K({ideal.ring, polys_q(ideal.ring, {"t^2+1"})}, p).polys.empty());
  CHECK(texts(lift_to_K({ideal.ring, polys_q(ideal.ring, {"1"})}, p)) == Strings{"1"});
}

TEST_CASE("nfmodstd and buchberger_direct on the worked example") {
  const Problem p = parse_problem(kWorked);
  const NfResult r = nfmodstd(p);
  const Strings expected{"y^2+a*x+a*y", "x*y+a*x+1", "x^2+a*y"};
  CHECK(texts(r.basis) == expected);
  CHECK(texts(buchberger_direct(p)) == expected);
  CHECK(to_text(r.basis) == "y^2+a*x+a*y\nx*y+a*x+1\nx^2+a*y\n");
}

TEST_CASE("trivial ideals") {
  CHECK(texts(nfmodstd(parse_problem("vars x\nminvar a\nminpoly a^2+1\ngen x\n")).basis) == Strings{"x"});
  CHECK(texts(nfmodstd(parse_problem("vars x\nminvar a\nminpoly a^2+1\ngen a*x-x+1\ngen x\n")).basis) ==
        Strings{"1"});
  // a*x - 1 and x - a: a^2 = 1 is false in Q(i), so the ideal is the unit ideal.
  CHECK(texts(buchberger_direct(parse_problem("vars x\nminvar a\nminpoly a^2+1\ngen a*x-1\ngen x-a\n"))) ==
        Strings{"1"});
  // x - a and a*x + 1: a^2 + 1 = 0, consistent.
  CHECK(texts(nfmodstd(parse_problem("vars x\nminvar a\nminpoly a^2+1\ngen x-a\ngen a*x+1\n")).basis) ==
        Strings{"x-a"});
}

TEST_CASE("lex order through both routes") {
  const Problem p = parse_problem(
      "vars x y\nminvar a\nminpoly a^3-2\norder lex\ngen x^2-a*y\ngen x*y-1\n");
  const auto direct = buchberger_direct(p);
  CHECK(nfmodstd(p).basis.polys == direct.polys);
  CHECK(is_reduced_gb(direct.polys));
}

TEST_CASE("to_json") {
  const Problem p = parse_problem(
      "vars x y\nminvar a\nminpoly a^2+1\ngen 2*x - 1/3*a*y + 1/2\n");
  const auto basis = nfmodstd(p).basis;
  const auto doc = nlohmann::json::parse(to_json(basis, p));
  CHECK(doc["vars"] == nlohmann::json::array({"x", "y"}));
  CHECK(doc["minpoly"] == "a^2+1");
  CHECK(doc["minvar"] == "a");
  REQUIRE(doc["basis"].size() == 1);
  const auto& terms = doc["basis"][0];
  REQUIRE(terms.size() == 3);
  CHECK(terms[0]["exponents"] == nlohmann::json::array({1, 0}));
  CHECK(terms[0]["alpha_poly"] == "1");
  CHECK(terms[1]["exponents"] == nlohmann::json::array({0, 1}));
  CHECK(terms[1]["alpha_poly"] == "-1/6*a");
  CHECK(terms[1]["coeff_num"] == nlohmann::json::array({"0", "-1"}));
  CHECK(terms[1]["coeff_den"] == nlohmann::json::array({"1", "6"}));
  CHECK(terms[2]["coeff_num"] == nlohmann::json::array({"1"}));
  CHECK(terms[2]["coeff_den"] == nlohmann::json::array({"4"}));
  CHECK(doc["text"][0] == "x-1/6*a*y+1/4");
}

TEST_CASE("property: nfmodstd equals buchberger_direct on random small instances (40 cases)") {
  Rng rng(2718);
  int nontrivial = 0, tested = 0;
  for (int it = 0; it < 40; ++it) {
    const int nvars = static_cast<int>(uniform(rng, 1, 3));
    const int ngens = static_cast<int>(uniform(rng, 1, 3));
    const int fdeg = static_cast<int>(uniform(rng, 2, 3));
    const std::string text = random_problem_text(rng, nvars, ngens, 3, fdeg);
    CAPTURE(text);
    const Problem p = parse_problem(text);
    // Irreducibility of f is a precondition; skip reducible draws.
    const UniPolyQ& f = p.minpoly;
    bool has_rational_root = false;
    for (int num = -3; num <= 3 && !has_rational_root; ++num) {
      Rational v = 0;
      for (std::size_t i = f.coeffs().size(); i-- > 0;) v = v * num + f.coeffs()[i];
      has_rational_root = v == 0;
    }
    if (has_rational_root) continue;
    ModularConfig config;
    config.seed = static_cast<std::uint64_t>(it) + 1;
    const NfResult r = nfmodstd(p, config);
    const auto direct = buchberger_direct(p);
    REQUIRE(texts(r.basis) == texts(direct));
    REQUIRE(is_reduced_gb(r.basis.polys));
    REQUIRE(all_reduce_to_zero<NumberField>(p.generators_k(r.basis.ring), r.basis.polys));
    REQUIRE(has_tagged_structure(r.tagged, p.minpoly));
    for (const auto& g : r.basis.polys) {
      for (const auto& t : g.terms()) REQUIRE(static_cast<int>(t.coef.coeffs().size()) <= fdeg);
    }
    ++tested;
    if (!r.basis.is_unit()) ++nontrivial;
  }
  CHECK(tested >= 20);
  MESSAGE(nontrivial << " of the instances have a proper ideal");
}
