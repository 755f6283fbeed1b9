#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "anfgb/mpoly.hpp"

namespace anfgb {

/// Elements are monic and sorted by increasing leading monomial.
template <CoefficientField F>
struct GroebnerBasis {
  RingPtr<F> ring;
  std::vector<MultiPoly<F>> polys;

  std::size_t size() const { return polys.size(); }
  bool is_unit() const { return polys.size() == 1 && polys[0].is_constant(); }
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(polys.size());
    for (const auto& g : polys) out.push_back(g.lm());
    return out;
  }
  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& g : polys) out.push_back(format(g));
    return out;
  }
};

template <CoefficientField F>
void sort_by_leading_monomial(std::vector<MultiPoly<F>>& polys, const MonomialOrder& order) {
  std::sort(polys.begin(), polys.end(), [&](const MultiPoly<F>& a, const MultiPoly<F>& b) {
    return order.compare(a.lm(), b.lm()) < 0;
  });
}

namespace detail {

/// Index of the first nonzero element of G whose leading monomial divides m.
template <CoefficientField F>
std::ptrdiff_t find_reducer(const Monomial& m, std::span<const MultiPoly<F>> G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (!G[i].is_zero() && G[i].lm().divides(m)) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

}  // namespace detail

/// Full reduction: the result has no term divisible by any lm in G, and
/// g - result lies in the ideal generated by G.
template <CoefficientField F>
MultiPoly<F> normal_form(const MultiPoly<F>& g, std::span<const MultiPoly<F>> G) {
  using TermT = Term<F>;
  if (g.is_zero()) return g;
  const F& k = g.field();
  const MonomialOrder& order = g.ring()->order;
  for (const auto& h : G) {
    if (!h.is_zero()) MultiPoly<F>::check_same_ring(g, h);
  }

  std::vector<TermT> work = g.terms();
  std::vector<TermT> next;
  std::vector<TermT> remainder;
  std::size_t pos = 0;
  while (pos < work.size()) {
    const std::ptrdiff_t idx = detail::find_reducer(work[pos].mono, G);
    if (idx < 0) {
      remainder.push_back(std::move(work[pos++]));
      continue;
    }
    const MultiPoly<F>& h = G[static_cast<std::size_t>(idx)];
    const Monomial shift = h.lm().quotient_of(work[pos].mono);
    const typename F::Elem factor = k.neg(
        k.equal(h.lc(), k.one()) ? work[pos].coef : k.mul(work[pos].coef, k.inv(h.lc())));

    // work[pos+1..] + factor * shift * tail(h), merged in order.
    next.clear();
    next.reserve(work.size() - pos + h.size());
    const auto& ht = h.terms();
    std::size_t i = pos + 1, j = 1;
    while (i < work.size() && j < ht.size()) {
      Monomial m = ht[j].mono * shift;
      const auto c = order.compare(work[i].mono, m);
      if (c > 0) {
        next.push_back(std::move(work[i++]));
      } else if (c < 0) {
        next.push_back({m, k.mul(factor, ht[j].coef)});
        ++j;
      } else {
        auto s = k.add(work[i].coef, k.mul(factor, ht[j].coef));
        if (!k.is_zero(s)) next.push_back({m, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < work.size(); ++i) next.push_back(std::move(work[i]));
    for (; j < ht.size(); ++j) next.push_back({ht[j].mono * shift, k.mul(factor, ht[j].coef)});
    std::swap(work, next);
    pos = 0;
  }
  return MultiPoly<F>::from_sorted(g.ring(), std::move(remainder));
}

template <CoefficientField F>
MultiPoly<F> normal_form(const MultiPoly<F>& g, const std::vector<MultiPoly<F>>& G) {
  return normal_form(g, std::span<const MultiPoly<F>>(G));
}

/// lcm/lt(a) * a - lcm/lt(b) * b
template <CoefficientField F>
MultiPoly<F> spoly(const MultiPoly<F>& a, const MultiPoly<F>& b) {
  if (a.is_zero() || b.is_zero()) {
    throw Error(ErrorCode::ZeroPolynomial, "S-polynomial of a zero polynomial");
  }
  const F& k = a.field();
  const Monomial l = lcm(a.lm(), b.lm());
  return a.mul_term(k.inv(a.lc()), a.lm().quotient_of(l)) -
         b.mul_term(k.inv(b.lc()), b.lm().quotient_of(l));
}

/// Mutually tail-reduces an antichain of leading monomials, makes every
/// element monic and sorts by increasing leading monomial. Elements whose
/// leading monomial is divisible by another's are dropped first.
template <CoefficientField F>
std::vector<MultiPoly<F>> interreduce(std::vector<MultiPoly<F>> polys) {
  std::erase_if(polys, [](const MultiPoly<F>& p) { return p.is_zero(); });
  if (polys.empty()) return polys;
  const MonomialOrder& order = polys.front().ring()->order;
  sort_by_leading_monomial(polys, order);
  std::vector<MultiPoly<F>> minimal;
  for (auto& p : polys) {
    bool redundant = false;
    for (const auto& q : minimal) {
      if (q.lm().divides(p.lm())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(p));
  }
  std::vector<MultiPoly<F>> out;
  out.reserve(minimal.size());
  std::vector<MultiPoly<F>> others;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    out.push_back(normal_form(minimal[i], others).monic());
  }
  return out;
}

struct BuchbergerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_skipped = 0;
};

/// Reduced Groebner basis of the ideal generated by gens. Normal selection
/// strategy with Gebauer-Moeller pair bookkeeping (product and chain
/// criteria); every new element is fully reduced and made monic before it
/// joins the basis.
template <CoefficientField F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, std::span<const MultiPoly<F>> gens,
                            BuchbergerStats* stats = nullptr) {
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  const MonomialOrder& order = ring->order;
  std::vector<MultiPoly<F>> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;

  auto active_set = [&] {
    std::vector<MultiPoly<F>> out;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (active[i]) out.push_back(polys[i]);
    }
    return out;
  };
  auto unit = [&] {
    return GroebnerBasis<F>{ring, {MultiPoly<F>::constant(ring, ring->field.one())}};
  };

  // Gebauer-Moeller update with the new element h (already in polys).
  auto update = [&](std::size_t h) {
    const Monomial& lh = polys[h].lm();
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < h; ++g) {
      if (active[g]) candidates.push_back({g, h, lcm(polys[g].lm(), lh)});
    }
    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& cur = candidates[c];
      bool keep = polys[cur.i].lm().coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t o = c + 1; o < candidates.size() && keep; ++o) {
          if (candidates[o].lcm.divides(cur.lcm)) keep = false;
        }
        for (std::size_t o = 0; o < kept.size() && keep; ++o) {
          if (kept[o].lcm.divides(cur.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(cur);
    }
    std::erase_if(pairs, [&](const Pair& pr) {
      return lh.divides(pr.lcm) && !(lcm(polys[pr.i].lm(), lh) == pr.lcm) &&
             !(lcm(polys[pr.j].lm(), lh) == pr.lcm);
    });
    for (auto& pr : kept) {
      if (polys[pr.i].lm().coprime(lh)) {
        ++st.pairs_skipped;
      } else {
        pairs.push_back(std::move(pr));
      }
    }
    for (std::size_t g = 0; g < h; ++g) {
      if (active[g] && lh.divides(polys[g].lm())) active[g] = false;
    }
  };

  std::vector<MultiPoly<F>> reducers;
  auto insert = [&](MultiPoly<F> h) -> bool {
    h = h.monic();
    if (h.is_constant()) return false;
    polys.push_back(std::move(h));
    active.push_back(true);
    update(polys.size() - 1);
    reducers = active_set();
    return true;
  };

  std::vector<MultiPoly<F>> input;
  for (const auto& g : gens) {
    if (!g.is_zero()) {
      MultiPoly<F>::check_same_ring(MultiPoly<F>(ring), g);
      input.push_back(g.monic());
    }
  }
  sort_by_leading_monomial(input, order);
  input.erase(std::unique(input.begin(), input.end()), input.end());

  for (const auto& g : input) {
    MultiPoly<F> h = normal_form(g, reducers);
    if (h.is_zero()) continue;
    if (!insert(std::move(h))) return unit();
  }

  while (!pairs.empty()) {
    auto before = [&](const Pair& a, const Pair& b) {
      const auto c = order.compare(a.lcm, b.lcm);
      return c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i));
    };
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      if (before(*it, *best)) best = it;
    }
    const Pair pr = *best;
    pairs.erase(best);
    ++st.pairs_reduced;
    MultiPoly<F> h = normal_form(spoly(polys[pr.i], polys[pr.j]), reducers);
    if (h.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    if (!insert(std::move(h))) return unit();
  }

  return GroebnerBasis<F>{ring, interreduce(active_set())};
}

template <CoefficientField F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, const std::vector<MultiPoly<F>>& gens,
                            BuchbergerStats* stats = nullptr) {
  return buchberger(ring, std::span<const MultiPoly<F>>(gens), stats);
}

/// Buchberger's criterion: every S-polynomial reduces to zero. With
/// use_criteria, a pair is not reduced when its leading monomials are
/// coprime, or when some third leading monomial lm_k divides lcm(i, j) with
/// lcm(i, k) and lcm(j, k) both proper divisors of lcm(i, j). The chain
/// test is strict so it is sound by induction on the lcm.
template <CoefficientField F>
bool s_polys_reduce_to_zero(std::span<const MultiPoly<F>> G, bool use_criteria = true) {
  auto chain = [&](std::size_t i, std::size_t j, const Monomial& l) {
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (k == i || k == j || !G[k].lm().divides(l)) continue;
      if (lcm(G[i].lm(), G[k].lm()) != l && lcm(G[j].lm(), G[k].lm()) != l) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (use_criteria) {
        if (G[i].lm().coprime(G[j].lm())) continue;
        if (chain(i, j, lcm(G[i].lm(), G[j].lm()))) continue;
      }
      if (!normal_form(spoly(G[i], G[j]), G).is_zero()) return false;
    }
  }
  return true;
}

/// Monic, pairwise tail-irreducible, and closed under S-polynomial reduction.
template <CoefficientField F>
bool is_reduced_gb(std::span<const MultiPoly<F>> G) {
  for (const auto& g : G) {
    if (g.is_zero() || !g.field().equal(g.lc(), g.field().one())) return false;
  }
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : G[i].terms()) {
        if (G[j].lm().divides(t.mono)) return false;
      }
    }
  }
  return s_polys_reduce_to_zero(G);
}

template <CoefficientField F>
bool is_reduced_gb(const std::vector<MultiPoly<F>>& G) {
  return is_reduced_gb(std::span<const MultiPoly<F>>(G));
}

}  // namespace anfgb
