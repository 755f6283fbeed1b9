#include <algorithm>
#include <map>

#include <json.hpp>

#include "anfgb/problem.hpp"

namespace anfgb {

namespace {

MonomialOrder x_order(BaseOrder base) {
  return base == BaseOrder::Lex ? MonomialOrder::lex() : MonomialOrder::degrevlex();
}

std::string fresh_name(const std::vector<std::string>& vars, std::string name) {
  while (std::find(vars.begin(), vars.end(), name) != vars.end()) name += '_';
  return name;
}

/// Groups the terms of a polynomial over Q[X, t] (t last) by X-monomial,
/// collecting the Q[t] coefficient of each into an element of K.
PolyK collapse_tag(const PolyQ& g, const RingK& target) {
  const std::size_t n = target->nvars();
  const NumberField& k = target->field;
  std::map<std::vector<unsigned>, std::pair<Monomial, std::vector<Rational>>> groups;
  for (const auto& t : g.terms()) {
    Monomial x(n);
    std::vector<unsigned> key(n);
    for (std::size_t i = 0; i < n; ++i) {
      x.set(i, t.mono[i]);
      key[i] = t.mono[i];
    }
    auto& [mono, coeffs] = groups.try_emplace(key, x, std::vector<Rational>{}).first->second;
    const std::size_t d = t.mono[n];
    if (coeffs.size() <= d) coeffs.resize(d + 1, 0);
    coeffs[d] += t.coef;
  }
  std::vector<Term<NumberField>> terms;
  terms.reserve(groups.size());
  for (auto& [key, entry] : groups) {
    terms.push_back({entry.first, k.element(UniPolyQ(RationalField{}, std::move(entry.second)))});
  }
  return PolyK::from_terms(target, std::move(terms));
}

}  // namespace

RingK Problem::ring_k() const { return make_ring(field(), vars, x_order(order)); }

std::vector<PolyK> Problem::generators_k(const RingK& ring) const {
  std::vector<PolyK> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(collapse_tag(g, ring));
  return out;
}

TaggedIdeal to_tagged(const Problem& problem) {
  std::vector<std::string> names = problem.vars;
  names.push_back(fresh_name(problem.vars, "t"));
  RingQ ring = make_ring(RationalField{}, std::move(names),
                         MonomialOrder::product(problem.order, problem.vars.size()));
  TaggedIdeal ideal{ring, {}, problem.minpoly};
  for (const auto& g : problem.generators) {
    if (g.is_zero()) continue;
    ideal.gens.push_back(PolyQ::from_terms(ring, g.terms()));
  }
  return ideal;
}

GroebnerBasis<NumberField> lift_to_K(const GroebnerBasis<RationalField>& tagged,
                                     const Problem& problem) {
  RingK ring = problem.ring_k();
  const std::size_t n = problem.vars.size();
  std::vector<PolyK> out;
  for (const auto& g : tagged.polys) {
    if (g.lm().degree(0, n) == 0) continue;  // f itself, or 1 over K
    out.push_back(collapse_tag(g, ring).monic());
  }
  const bool unit = std::any_of(tagged.polys.begin(), tagged.polys.end(),
                                [](const PolyQ& g) { return g.lm().is_one(); });
  if (unit) out = {PolyK::constant(ring, ring->field.one())};
  sort_by_leading_monomial(out, ring->order);
  return GroebnerBasis<NumberField>{ring, std::move(out)};
}

NfResult nfmodstd(const Problem& problem, const ModularConfig& config) {
  const TaggedIdeal ideal = to_tagged(problem);
  ModularResult r = modular_gb(ideal, config);
  GroebnerBasis<NumberField> basis = lift_to_K(r.basis, problem);
  return NfResult{std::move(basis), std::move(r.basis), r.stats};
}

// Under degrevlex the computation runs on the homogenised generators with the
// homogenising variable last (hence smallest), then dehomogenises and
// interreduces. Processing a homogeneous ideal degree by degree keeps the
// intermediate bases canonical; on inhomogeneous input the coefficients of
// intermediate elements over Q(a) can double with every new element.
GroebnerBasis<NumberField> buchberger_direct(const Problem& problem) {
  RingK ring = problem.ring_k();
  std::vector<PolyK> gens = problem.generators_k(ring);
  if (problem.order != BaseOrder::DegRevLex) return buchberger(ring, gens);

  const std::size_t n = problem.vars.size();
  std::vector<std::string> names = problem.vars;
  names.push_back(fresh_name(names, "h"));
  RingK hring = make_ring(ring->field, std::move(names), MonomialOrder::degrevlex());
  std::vector<PolyK> homog;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    unsigned d = 0;
    for (const auto& t : g.terms()) d = std::max(d, t.mono.degree());
    std::vector<Term<NumberField>> terms;
    for (const auto& t : g.terms()) {
      Monomial m(n + 1);
      for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
      m.set(n, d - t.mono.degree());
      terms.push_back({m, t.coef});
    }
    homog.push_back(PolyK::from_terms(hring, std::move(terms)));
  }
  GroebnerBasis<NumberField> hb = buchberger(hring, homog);
  std::vector<PolyK> dehomog;
  for (const auto& g : hb.polys) {
    std::vector<Term<NumberField>> terms;
    for (const auto& t : g.terms()) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
      terms.push_back({m, t.coef});
    }
    dehomog.push_back(PolyK::from_terms(ring, std::move(terms)));
  }
  return GroebnerBasis<NumberField>{ring, interreduce(std::move(dehomog))};
}

std::string to_json(const GroebnerBasis<NumberField>& basis, const Problem& problem) {
  using nlohmann::json;
  const NumberField& k = basis.ring->field;
  json polys = json::array();
  for (const auto& g : basis.polys) {
    json terms = json::array();
    for (const auto& t : g.terms()) {
      std::vector<unsigned> exps(t.mono.arity());
      for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = t.mono[i];
      std::vector<std::string> num, den;
      for (const auto& c : t.coef.coeffs()) {
        num.push_back(c.get_num().get_str());
        den.push_back(c.get_den().get_str());
      }
      terms.push_back({{"exponents", exps},
                       {"alpha_poly", k.format(t.coef)},
                       {"coeff_num", num},
                       {"coeff_den", den}});
    }
    polys.push_back(std::move(terms));
  }
  json doc{{"basis", std::move(polys)},
           {"minpoly", format(problem.minpoly, problem.minvar)},
           {"minvar", problem.minvar},
           {"vars", problem.vars}};
  std::vector<std::string> text;
  for (const auto& g : basis.polys) text.push_back(format(g));
  doc["text"] = text;
  return doc.dump(2);
}

std::string to_text(const GroebnerBasis<NumberField>& basis) {
  std::string out;
  for (const auto& g : basis.polys) out += format(g) + "\n";
  return out;
}

}  // namespace anfgb
