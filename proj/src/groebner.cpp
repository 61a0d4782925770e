#include "fsk/groebner.hpp"

#include <algorithm>
#include <optional>

#include "fsk/error.hpp"

namespace fsk {

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t sugar;
};

struct Element {
  Polynomial poly;
  Monomial lm;
  std::uint32_t mask;
  std::uint64_t sugar;
  bool active = true;
};

bool is_module_lm(const Monomial& m) { return m.component() != 0; }

// Leading-term reduction of f by the active elements; returns the reduced
// polynomial and updates its sugar.
Polynomial top_reduce(Polynomial f, std::uint64_t& sugar, const std::vector<Element>& basis) {
  const PrimeField& k = f.ring()->field();
  while (!f.is_zero()) {
    const Monomial& lm = f.leading_monomial();
    std::uint32_t mask = lm.divmask();
    const Element* div = nullptr;
    for (const auto& e : basis) {
      if (!e.active || (e.mask & ~mask)) continue;
      if (e.lm.divides(lm)) {
        div = &e;
        break;
      }
    }
    if (!div) break;
    Monomial q = lm / div->lm;
    Coeff c = k.mul(f.leading_coeff(), k.inv(div->poly.leading_coeff()));
    sugar = std::max(sugar, q.degree() + div->sugar);
    f = f.minus_term_times(c, q, div->poly);
  }
  return f;
}

Polynomial full_reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
  if (f.is_zero() || basis.empty()) return f;
  const PrimeField& k = f.ring()->field();
  std::vector<std::uint32_t> masks;
  std::vector<Coeff> inv_lc;
  masks.reserve(basis.size());
  for (const auto& g : basis) {
    masks.push_back(g.is_zero() ? 0 : g.leading_monomial().divmask());
    inv_lc.push_back(g.is_zero() ? 0 : k.inv(g.leading_coeff()));
  }
  std::vector<Term> done;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    std::uint32_t mask = lt.mono.divmask();
    std::size_t hit = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero() || (masks[i] & ~mask)) continue;
      if (basis[i].leading_monomial().divides(lt.mono)) {
        hit = i;
        break;
      }
    }
    if (hit == basis.size()) {
      done.push_back(lt);
      // Drop the leading term.
      std::vector<Term> ts(rest.terms().begin() + 1, rest.terms().end());
      rest = Polynomial(rest.ring(), std::move(ts));
      continue;
    }
    const Polynomial& g = basis[hit];
    Monomial q = lt.mono / g.leading_monomial();
    rest = rest.minus_term_times(k.mul(lt.coeff, inv_lc[hit]), q, g);
  }
  return Polynomial(f.ring(), std::move(done));
}

}  // namespace

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
  return full_reduce(f, basis);
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  std::vector<Element> G;
  std::vector<Pair> B;

  auto insert = [&](Polynomial h, std::uint64_t sugar) {
    h = h.monic();
    const std::size_t t = G.size();
    Monomial lm_t = h.leading_monomial();
    const bool ring_elem = !is_module_lm(lm_t);

    // Candidate new pairs.
    std::vector<Pair> C;
    for (std::size_t i = 0; i < t; ++i) {
      if (!G[i].active) continue;
      if (G[i].lm.component() != lm_t.component()) continue;
      Monomial l = G[i].lm.lcm(lm_t);
      std::uint64_t s = std::max(G[i].sugar + (l.degree() - G[i].lm.degree()),
                                 sugar + (l.degree() - lm_t.degree()));
      C.push_back({i, t, l, s});
    }
    // Criterion M: drop (i,t) if some (j,t) has lcm properly dividing it.
    std::vector<bool> keep(C.size(), true);
    for (std::size_t a = 0; a < C.size(); ++a) {
      for (std::size_t b = 0; b < C.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (C[b].lcm.divides(C[a].lcm) && !(C[b].lcm == C[a].lcm)) keep[a] = false;
      }
    }
    // Criterion F and the product criterion: one pair per lcm, none if any
    // pair with that lcm has coprime leading terms.
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      if (!keep[a]) continue;
      bool seen = false;
      for (const auto& d : D)
        if (d.lcm == C[a].lcm) seen = true;
      if (seen) continue;
      bool coprime = false;
      for (std::size_t b = 0; b < C.size(); ++b) {
        if (!keep[b] || !(C[b].lcm == C[a].lcm)) continue;
        if (ring_elem && G[C[b].i].lm.coprime(lm_t)) coprime = true;
      }
      if (!coprime) D.push_back(C[a]);
    }
    // Criterion B on old pairs.
    std::vector<Pair> B2;
    B2.reserve(B.size() + D.size());
    for (const auto& pr : B) {
      bool drop = false;
      if (lm_t.divides(pr.lcm)) {
        Monomial li = G[pr.i].lm.lcm(lm_t), lj = G[pr.j].lm.lcm(lm_t);
        if (G[pr.i].lm.component() == lm_t.component() && !(li == pr.lcm) && !(lj == pr.lcm))
          drop = true;
      }
      if (!drop) B2.push_back(pr);
    }
    B2.insert(B2.end(), D.begin(), D.end());
    B = std::move(B2);
    // Old elements with leading monomial divisible by lm_t leave the basis.
    for (auto& e : G)
      if (e.active && lm_t.divides(e.lm)) e.active = false;
    G.push_back({h, lm_t, lm_t.divmask(), sugar, true});
  };

  // Seed with reduced generators in increasing order of leading monomial.
  std::vector<Polynomial> seeds;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    seeds.push_back(g.in_ring(ring));
  }
  std::sort(seeds.begin(), seeds.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.leading_monomial(), b.leading_monomial()) == Cmp::LT;
  });
  for (auto& g : seeds) {
    std::uint64_t s = static_cast<std::uint64_t>(std::max<long long>(g.degree(), 0));
    Polynomial h = top_reduce(g, s, G);
    if (!h.is_zero()) insert(h, s);
  }

  while (!B.empty()) {
    auto best = std::min_element(B.begin(), B.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return ring->compare(a.lcm, b.lcm) == Cmp::LT;
    });
    Pair pr = *best;
    *best = B.back();
    B.pop_back();
    const Element& gi = G[pr.i];
    const Element& gj = G[pr.j];
    const PrimeField& k = ring->field();
    Polynomial s = gi.poly.times_term(pr.lcm / gi.lm, 1)
                       .minus_term_times(k.mul(gi.poly.leading_coeff(),
                                               k.inv(gj.poly.leading_coeff())),
                                         pr.lcm / gj.lm, gj.poly);
    std::uint64_t sugar = pr.sugar;
    Polynomial h = top_reduce(std::move(s), sugar, G);
    if (!h.is_zero()) insert(std::move(h), sugar);
  }

  // Minimalize and interreduce.
  std::vector<Polynomial> minimal;
  for (const auto& e : G)
    if (e.active) minimal.push_back(e.poly);
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    // Leading term is irreducible by the others, so only the tail changes.
    Polynomial lead = Polynomial::monomial(ring, minimal[i].leading_monomial(),
                                           minimal[i].leading_coeff());
    Polynomial tail = full_reduce(minimal[i] - lead, others);
    out.push_back((lead + tail).monic());
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.leading_monomial(), b.leading_monomial()) == Cmp::GT;
  });
  return out;
}

bool is_groebner_basis(const std::vector<Polynomial>& basis) {
  const PrimeField* k = nullptr;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Polynomial& a = basis[i];
      const Polynomial& b = basis[j];
      if (a.is_zero() || b.is_zero()) continue;
      if (a.leading_monomial().component() != b.leading_monomial().component()) continue;
      k = &a.ring()->field();
      Monomial l = a.leading_monomial().lcm(b.leading_monomial());
      Polynomial s = a.times_term(l / a.leading_monomial(), b.leading_coeff())
                         .minus_term_times(a.leading_coeff(), l / b.leading_monomial(), b);
      if (!full_reduce(s, basis).is_zero()) return false;
    }
  }
  (void)k;
  return true;
}

namespace {

// Builds g_i * e_{shift(g_i)} + e_{offset+i+1} under a position-over-term
// order and returns the basis together with the offset used.
std::pair<std::vector<Polynomial>, std::uint32_t> tagged_basis(
    const std::vector<Polynomial>& gens, RingPtr& pot_ring) {
  const RingPtr& base = gens.front().ring();
  MonomialOrder ord = base->order();
  ord.position_over_term = true;
  pot_ring = base->with_order(ord);
  std::uint32_t r = 0;
  for (const auto& g : gens) r = std::max(r, g.max_component());
  const std::uint32_t offset = std::max<std::uint32_t>(r, 1);
  std::vector<Polynomial> tagged;
  tagged.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Polynomial g = gens[i].in_ring(pot_ring);
    if (r == 0) g = g * Polynomial::basis_vector(pot_ring, 1);
    tagged.push_back(g + Polynomial::basis_vector(pot_ring, offset + 1 + static_cast<std::uint32_t>(i)));
  }
  return {buchberger(tagged, pot_ring), offset};
}

}  // namespace

std::optional<std::vector<Polynomial>> lift(const Polynomial& f,
                                            const std::vector<Polynomial>& gens) {
  const RingPtr& base = f.ring();
  if (gens.empty()) {
    if (f.is_zero()) return std::vector<Polynomial>{};
    return std::nullopt;
  }
  RingPtr pot;
  auto [gb, offset] = tagged_basis(gens, pot);
  Polynomial target = f.in_ring(pot);
  std::uint32_t r = 0;
  for (const auto& g : gens) r = std::max(r, g.max_component());
  if (r == 0) target = target * Polynomial::basis_vector(pot, 1);
  Polynomial rem = full_reduce(target, gb);
  if (rem.max_component() > 0) {
    for (const auto& t : rem.terms())
      if (t.mono.component() <= offset) return std::nullopt;
  }
  std::vector<Polynomial> cof;
  cof.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    cof.push_back((-rem.component(offset + 1 + static_cast<std::uint32_t>(i))).in_ring(base));
  return cof;
}

std::vector<Polynomial> syzygies(const std::vector<Polynomial>& gens) {
  if (gens.empty()) return {};
  const RingPtr& base = gens.front().ring();
  RingPtr pot;
  auto [gb, offset] = tagged_basis(gens, pot);
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    if (g.leading_monomial().component() <= offset) continue;
    std::vector<Term> ts;
    for (const auto& t : g.terms()) {
      Monomial m = t.mono;
      m.set_component(t.mono.component() - offset);
      ts.push_back({m, t.coeff});
    }
    out.push_back(Polynomial(base, std::move(ts)));
  }
  return out;
}

}  // namespace fsk
