#include "fsk/trace.hpp"

#include <map>

#include "fsk/error.hpp"
#include "fsk/primes.hpp"

namespace fsk {

namespace {

// Splits f in S.ring by the exponents of the adjoined variables; the
// coefficients land in R's ambient ring.
std::map<std::vector<std::uint32_t>, Polynomial> split_by_adjoined(const ExtensionPresentation& S,
                                                                   const Polynomial& f) {
  const std::size_t m = S.nadjoined();
  const std::size_t n = S.base.ring->nvars();
  std::map<std::vector<std::uint32_t>, std::vector<Term>> parts;
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> key(m);
    for (std::size_t i = 0; i < m; ++i) key[i] = t.mono[i];
    Monomial x(n);
    for (std::size_t i = 0; i < n; ++i) x.set(i, t.mono[m + i]);
    parts[key].push_back({x, t.coeff});
  }
  std::map<std::vector<std::uint32_t>, Polynomial> out;
  for (auto& [k, ts] : parts) out.emplace(k, Polynomial(S.base.ring, std::move(ts)));
  return out;
}

void require_monic_tower(const ExtensionPresentation& S) {
  const std::size_t m = S.nadjoined();
  if (S.monic.size() != m) throw Error(ErrorKind::InvalidArgument, "one monic relation per adjoined variable");
  for (std::size_t v = 0; v < m; ++v) {
    const Polynomial& f = S.monic[v];
    const long long deg = f.degree_in(v);
    if (deg <= 0) throw Error(ErrorKind::InvalidArgument, "relation " + std::to_string(v) + " is not monic");
    bool lead = false;
    for (const auto& t : f.terms()) {
      for (std::size_t i = 0; i < m; ++i)
        if (i != v && t.mono[i])
          throw Error(ErrorKind::InvalidArgument, "monic relation mixes adjoined variables: " + f.to_string());
      if (t.mono[v] == deg) {
        bool pure = t.coeff == 1;
        for (std::size_t i = m; i < t.mono.size(); ++i) pure = pure && t.mono[i] == 0;
        if (!pure) throw Error(ErrorKind::InvalidArgument, "relation is not monic: " + f.to_string());
        lead = true;
      }
    }
    if (!lead) throw Error(ErrorKind::InvalidArgument, "relation is not monic: " + f.to_string());
  }
}

std::vector<std::vector<std::uint32_t>> exponent_box(const std::vector<std::uint32_t>& bounds) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> e(bounds.size(), 0);
  for (;;) {
    out.push_back(e);
    std::size_t i = 0;
    while (i < e.size() && ++e[i] == bounds[i]) e[i++] = 0;
    if (i == e.size()) return out;
  }
}

Polynomial adjoined_monomial(const ExtensionPresentation& S, const std::vector<std::uint32_t>& e) {
  Monomial m(S.ring->nvars());
  for (std::size_t i = 0; i < e.size(); ++i) m.set(i, e[i]);
  return Polynomial::monomial(S.ring, m);
}

Ideal tower_reducer(const ExtensionPresentation& S, const std::vector<bool>& use) {
  std::vector<Polynomial> g;
  for (const auto& f : S.base.J.gens()) g.push_back(S.embed(f));
  for (std::size_t v = 0; v < S.nadjoined(); ++v)
    if (use[v]) g.push_back(S.monic[v]);
  return Ideal(S.ring, g);
}

}  // namespace

ModulePresentation module_presentation(const ExtensionPresentation& S) {
  require_monic_tower(S);
  const std::size_t m = S.nadjoined();
  std::vector<std::uint32_t> bounds;
  for (std::size_t v = 0; v < m; ++v) bounds.push_back(S.monic_degree(v));
  ModulePresentation M;
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (const auto& e : exponent_box(bounds)) {
    index[e] = M.basis.size();
    M.basis.push_back(Monomial(e));
  }
  M.index_of_one = index.at(std::vector<std::uint32_t>(m, 0));
  M.relations.assign(M.basis.size(), {});
  const Ideal reducer = tower_reducer(S, std::vector<bool>(m, true));
  for (const auto& g : S.relations)
    for (const auto& [e, row] : index) {
      Polynomial red = reducer.normal_form(g * adjoined_monomial(S, e));
      if (red.is_zero()) continue;
      for (auto& col : M.relations) col.push_back(Polynomial(S.base.ring));
      for (auto& [k, coeff] : split_by_adjoined(S, red)) M.relations[index.at(k)].back() = coeff;
    }
  return M;
}

HomPresentation hom_presentation(const ModulePresentation& M, const RingPresentation& R) {
  const std::size_t n = M.basis.size();
  const std::size_t c = M.relations.empty() ? 0 : M.relations[0].size();
  HomPresentation H;
  if (c == 0) {
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<Polynomial> e(n, Polynomial(R.ring));
      e[a] = R.one();
      H.generators.push_back(e);
    }
    return H;
  }
  const auto& jg = R.J.basis();
  PolyMatrix A(c, std::vector<Polynomial>(n + c * jg.size(), Polynomial(R.ring)));
  for (std::size_t r = 0; r < c; ++r) {
    for (std::size_t a = 0; a < n; ++a) A[r][a] = M.relations[a][r];
    for (std::size_t l = 0; l < jg.size(); ++l) A[r][n + r * jg.size() + l] = -jg[l];
  }
  for (const auto& v : syzygy_kernel(A, R.ring)) {
    std::vector<Polynomial> phi(v.begin(), v.begin() + static_cast<long>(n));
    for (std::size_t r = 0; r < c; ++r) {
      Polynomial val(R.ring);
      for (std::size_t a = 0; a < n; ++a) val += phi[a] * M.relations[a][r];
      if (!R.J.contains(val)) throw Error(ErrorKind::CertificateFailure, "Hom generator does not kill a relation");
    }
    H.generators.push_back(std::move(phi));
  }
  return H;
}

namespace {

Ideal trace_by_hom(const ExtensionPresentation& S) {
  ModulePresentation M = module_presentation(S);
  HomPresentation H = hom_presentation(M, S.base);
  std::vector<Polynomial> g;
  for (const auto& phi : H.generators) g.push_back(phi[M.index_of_one]);
  return Ideal(S.base.ring, g) + S.base.J;
}

// S = R'[w_1..w_k] inside R'_X with R' free over R: the R'-dual of S is the
// conductor, and Hom_R(R', R) is generated by the top-coefficient map.
Ideal trace_by_conductor(const ExtensionPresentation& S) {
  require_monic_tower(S);
  const std::size_t m = S.nadjoined();
  std::vector<bool> is_root(m, true);
  std::vector<std::uint32_t> bir_bounds;
  for (const auto& b : S.birational) {
    is_root[b.var] = false;
    bir_bounds.push_back(S.monic_degree(b.var));
  }
  const RingPtr G = S.ring->with_order(MonomialOrder::grevlex());
  const Ideal Rprime = tower_reducer(S, is_root).in_ring(G);

  std::vector<Ideal> colons;
  for (const auto& e : exponent_box(bir_bounds)) {
    Polynomial Xe = Polynomial::constant(G, 1), ce = Polynomial::constant(G, 1);
    bool trivial = true;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j]) {
        trivial = false;
        Xe *= S.birational[j].X.in_ring(G).pow(e[j]);
        ce *= S.birational[j].c.in_ring(G).pow(e[j]);
      }
    if (trivial) continue;
    colons.push_back(quotient(Rprime + std::vector<Polynomial>{Xe}, ce));
  }
  Ideal conductor = colons.empty() ? Ideal::unit(G) : intersect(colons);

  std::vector<std::uint32_t> root_bounds(m, 1), top(m, 0);
  for (std::size_t v = 0; v < m; ++v)
    if (is_root[v]) {
      root_bounds[v] = S.monic_degree(v);
      top[v] = root_bounds[v] - 1;
    }
  const Ideal reducer = tower_reducer(S, is_root);
  std::vector<Polynomial> g;
  for (const auto& a : conductor.basis()) {
    const Polynomial aS = a.in_ring(S.ring);
    for (const auto& e : exponent_box(root_bounds)) {
      auto parts = split_by_adjoined(S, reducer.normal_form(aS * adjoined_monomial(S, e)));
      if (auto it = parts.find(top); it != parts.end()) g.push_back(it->second);
    }
  }
  return Ideal(S.base.ring, g) + S.base.J;
}

}  // namespace

Ideal trace_ideal(const ExtensionPresentation& S, TraceRoute route) {
  if (S.nadjoined() == 0 && S.relations.empty()) return Ideal::unit(S.base.ring);
  if (route == TraceRoute::Auto) route = S.birational.empty() ? TraceRoute::Hom : TraceRoute::Conductor;
  if (route == TraceRoute::Conductor) {
    if (S.birational.empty())
      throw Error(ErrorKind::InvalidArgument, "conductor route needs a birational tower");
    return trace_by_conductor(S);
  }
  return trace_by_hom(S);
}

bool is_split_at(const Ideal& trace, const Ideal& Q) { return !Q.contains(trace); }

bool is_split_at(const ExtensionPresentation& S, const Ideal& Q) { return is_split_at(trace_ideal(S), Q); }

VerificationReport verify_main_theorem(const RingPresentation& R, const Ideal& I,
                                       const ExtensionPresentation& S, const EnumerateOptions& opts) {
  VerificationReport rep;
  rep.tau = Ideal(R.ring, trace_ideal(S).basis());
  const Ideal IJ = I + R.J;
  rep.equals_input = rep.tau == IJ;
  const FrobeniusDatum fd = fedder_element(R);
  rep.compatible = is_compatible(rep.tau, fd, R);
  try {
    if (rep.tau.is_unit()) {
      rep.radical_check = true;
    } else {
      auto mins = minimal_primes(rep.tau);
      rep.radical_check = intersect(mins) == rep.tau;
    }
  } catch (const Error&) {
    rep.radical_check = false;
  }
  CompatibleLattice L = enumerate_compatible(fd, R, opts);
  for (const auto& Q : L.primes) {
    if (Q.contains(IJ)) continue;
    rep.etale_certified.push_back({Q, etale_certificate(S, Q).certified});
    rep.split_at.push_back({Q, is_split_at(rep.tau, Q)});
  }
  if (!IJ.is_unit()) {
    std::vector<Ideal> hint;
    for (const auto& [target, h] : opts.hints)
      if (target == IJ) hint = h;
    for (const auto& P : minimal_primes(IJ, hint)) rep.class_death.push_back({P, P.contains(rep.tau)});
  }
  return rep;
}

}  // namespace fsk
