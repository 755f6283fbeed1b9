#include "anfgb/mpoly.hpp"

namespace anfgb {

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

PolyP map_mod_p(const PolyQ& a, const RingP& target) {
  if (a.ring()->names != target->names || !(a.ring()->order == target->order)) {
    throw Error(ErrorCode::RingMismatch, "target ring has different variables or order");
  }
  const PrimeField& k = target->field;
  std::vector<Term<PrimeField>> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) {
    const auto c = k.from_rational(t.coef);
    if (c != 0) terms.push_back({t.mono, c});
  }
  return PolyP::from_sorted(target, std::move(terms));
}

RingP ring_mod_p(const RingQ& ring, std::uint32_t p) {
  return make_ring(PrimeField(p), ring->names, ring->order);
}

}  // namespace anfgb
