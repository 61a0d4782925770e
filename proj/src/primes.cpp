#include "fsk/primes.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "fsk/error.hpp"
#include "fsk/linalg.hpp"

namespace fsk {

namespace {

constexpr std::uint64_t kFactorSearchCap = 400000;

std::vector<std::size_t> support(const Polynomial& f) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < f.ring()->nvars(); ++v)
    if (f.degree_in(v) > 0) out.push_back(v);
  return out;
}

bool is_linear(const Polynomial& f) { return f.degree() <= 1; }

bool is_monomial_ideal(const std::vector<Polynomial>& basis) {
  return std::all_of(basis.begin(), basis.end(), [](const Polynomial& g) { return g.size() == 1; });
}

// Ring on a subset of variables, and maps in both directions.
struct SubRing {
  RingPtr ring;
  std::vector<std::size_t> vars;  // sub index -> full index
  std::vector<std::size_t> into;  // full index -> sub index (only for vars)

  SubRing(const RingPtr& full, std::vector<std::size_t> vs) : vars(std::move(vs)) {
    std::vector<std::string> names;
    for (auto v : vars) names.push_back(full->name(v));
    ring = Ring::make(full->p(), names, MonomialOrder::grevlex());
    into.assign(full->nvars(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) into[vars[i]] = i;
  }
  Polynomial down(const Polynomial& f) const { return f.map_variables(ring, into); }
  Polynomial up(const Polynomial& f, const RingPtr& full) const {
    return f.map_variables(full, vars);
  }
};

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t deg) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  auto rec = [&](auto&& self, std::size_t v, std::uint32_t left) -> void {
    if (v + 1 == nvars) {
      m.set(v, left);
      out.push_back(m);
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      m.set(v, e);
      self(self, v + 1, left - e);
    }
  };
  if (nvars == 0) return out;
  rec(rec, 0, deg);
  return out;
}

// A homogeneous factor of degree k of the form g, by exhaustive search over
// normalized candidates. Throws when the candidate count exceeds the cap.
std::optional<Polynomial> find_form_factor(const Polynomial& g, std::uint32_t k) {
  const RingPtr& r = g.ring();
  const Coeff p = r->p();
  auto monos = monomials_of_degree(r->nvars(), k);
  std::sort(monos.begin(), monos.end(),
            [&](const Monomial& a, const Monomial& b) { return r->compare(a, b) == Cmp::GT; });
  const std::size_t n = monos.size();
  long double count = 0, pw = 1;
  for (std::size_t i = 0; i < n; ++i, pw *= p) count += pw;
  if (count > kFactorSearchCap)
    throw Error(ErrorKind::DecompositionFailure,
                "factor search bound exceeded for " + g.to_string());
  // Leading coefficient 1 at position lead, free coefficients after it.
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::vector<Coeff> c(n - lead - 1, 0);
    for (;;) {
      std::vector<Term> ts{{monos[lead], 1}};
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) ts.push_back({monos[lead + 1 + i], c[i]});
      Polynomial cand(r, std::move(ts));
      if (divide_exact(g, cand)) return cand;
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == p) c[i++] = 0;
      if (i == c.size()) break;
    }
  }
  return std::nullopt;
}

// Projective smoothness of a form in at least three variables implies
// geometric irreducibility.
bool smooth_form(const Polynomial& g) {
  std::vector<Polynomial> gens{g};
  for (std::size_t v = 0; v < g.ring()->nvars(); ++v) gens.push_back(g.derivative(v));
  Ideal sing(g.ring(), gens);
  return sing.is_unit() || dimension(sing) == 0;
}

void factor_content_free(const Polynomial& g, std::vector<Polynomial>& out);

void factor_form(const Polynomial& g, std::vector<Polynomial>& out) {
  auto sv = support(g);
  SubRing sub(g.ring(), sv);
  Polynomial h = sub.down(g);
  if (sv.size() >= 3 && smooth_form(h)) {
    out.push_back(g.monic());
    return;
  }
  const auto d = static_cast<std::uint32_t>(h.degree());
  for (std::uint32_t k = 1; 2 * k <= d; ++k) {
    if (auto f = find_form_factor(h, k)) {
      factor_content_free(sub.up(*f, g.ring()), out);
      factor_content_free(sub.up(*divide_exact(h, *f), g.ring()), out);
      return;
    }
  }
  out.push_back(g.monic());
}

void factor_content_free(const Polynomial& g, std::vector<Polynomial>& out) {
  const RingPtr& r = g.ring();
  const PrimeField& F = r->field();
  auto sv = support(g);
  if (sv.empty()) return;
  if (sv.size() == 1) {
    for (auto& [u, m] : upoly::factor(F, to_upoly(g, sv[0]))) out.push_back(from_upoly(u, r, sv[0]));
    return;
  }
  if (is_linear(g)) {
    out.push_back(g.monic());
    return;
  }
  if (!g.is_homogeneous())
    throw Error(ErrorKind::DecompositionFailure,
                "cannot factor non-homogeneous polynomial " + g.to_string());
  if (sv.size() == 2) {
    // Dehomogenize at the second variable.
    std::size_t a = sv[0], b = sv[1];
    const auto d = static_cast<std::uint32_t>(g.degree());
    UPoly u(d + 1, 0);
    for (const auto& t : g.terms()) u[t.mono[a]] = t.coeff;
    upoly::trim(u);
    for (auto& [q, m] : upoly::factor(F, u)) {
      std::vector<Term> ts;
      const auto k = static_cast<std::uint32_t>(upoly::degree(q));
      for (std::uint32_t i = 0; i <= k; ++i) {
        if (!q[i]) continue;
        Monomial mono(r->nvars());
        mono.set(a, i);
        mono.set(b, k - i);
        ts.push_back({mono, q[i]});
      }
      out.push_back(Polynomial(r, std::move(ts)).monic());
    }
    return;
  }
  factor_form(g, out);
}

}  // namespace

UPoly to_upoly(const Polynomial& f, std::size_t var) {
  UPoly u;
  for (const auto& t : f.terms()) {
    for (std::size_t v = 0; v < f.ring()->nvars(); ++v)
      if (v != var && t.mono[v])
        throw Error(ErrorKind::InvalidArgument, "polynomial is not univariate");
    std::size_t e = t.mono[var];
    if (u.size() <= e) u.resize(e + 1, 0);
    u[e] = t.coeff;
  }
  upoly::trim(u);
  return u;
}

Polynomial from_upoly(const UPoly& u, const RingPtr& ring, std::size_t var) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i]) continue;
    Monomial m(ring->nvars());
    m.set(var, static_cast<std::uint32_t>(i));
    ts.push_back({m, u[i]});
  }
  return Polynomial(ring, std::move(ts));
}

std::vector<Polynomial> irreducible_factors(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot factor zero");
  const RingPtr& r = f.ring();
  std::vector<Polynomial> out;
  // Monomial content first.
  Monomial content(r->nvars());
  for (std::size_t v = 0; v < r->nvars(); ++v) {
    std::uint32_t lo = UINT32_MAX;
    for (const auto& t : f.terms()) lo = std::min(lo, t.mono[v]);
    content.set(v, lo);
    if (lo) out.push_back(Polynomial::variable(r, v));
  }
  Polynomial g = f;
  if (!content.is_one()) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) ts.push_back({t.mono / content, t.coeff});
    g = Polynomial(r, std::move(ts));
  }
  factor_content_free(g, out);
  std::vector<Polynomial> uniq;
  for (auto& h : out)
    if (std::find(uniq.begin(), uniq.end(), h) == uniq.end()) uniq.push_back(h);
  return uniq;
}

std::optional<std::vector<Monomial>> standard_monomials(const Ideal& I) {
  const auto& basis = I.basis();
  const RingPtr& r = I.ring();
  const std::size_t n = r->nvars();
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& g : basis) {
    const Monomial& lm = g.leading_monomial();
    std::size_t nz = 0, var = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (lm[v]) ++nz, var = v;
    if (nz == 0) return std::vector<Monomial>{};
    if (nz == 1 && (bound[var] == 0 || lm[var] < bound[var])) bound[var] = lm[var];
  }
  for (auto b : bound)
    if (b == 0) return std::nullopt;
  std::vector<Monomial> out;
  Monomial m(n);
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      for (const auto& g : basis)
        if (g.leading_monomial().divides(m)) return;
      out.push_back(m);
      return;
    }
    for (std::uint32_t e = 0; e < bound[v]; ++e) {
      m.set(v, e);
      self(self, v + 1);
    }
    m.set(v, 0);
  };
  rec(rec, 0);
  return out;
}

namespace {

// Coordinates of normal forms in the standard monomial basis.
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(const Ideal& I) : I_(I) {
    auto sm = standard_monomials(I);
    if (!sm) throw Error(ErrorKind::InvalidArgument, "ideal is not zero-dimensional");
    basis_ = std::move(*sm);
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[key(basis_[i])] = i;
  }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  Polynomial nf(const Polynomial& f) const { return I_.normal_form(f); }

  std::vector<Coeff> coords(const Polynomial& f) const {
    std::vector<Coeff> v(dim(), 0);
    Polynomial r = nf(f);
    for (const auto& t : r.terms()) v[index_.at(key(t.mono))] = t.coeff;
    return v;
  }

  Polynomial element(const std::vector<Coeff>& v) const {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) ts.push_back({basis_[i], v[i]});
    return Polynomial(I_.ring(), std::move(ts));
  }

  Polynomial pow(const Polynomial& f, std::uint64_t e) const {
    Polynomial result = nf(Polynomial::constant(I_.ring(), 1)), base = nf(f);
    while (e) {
      if (e & 1) result = nf(result * base);
      e >>= 1;
      if (e) base = nf(base * base);
    }
    return result;
  }

 private:
  static std::vector<std::uint32_t> key(const Monomial& m) {
    std::vector<std::uint32_t> k(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) k[i] = m[i];
    return k;
  }
  Ideal I_;
  std::vector<Monomial> basis_;
  std::map<std::vector<std::uint32_t>, std::size_t> index_;
};

UPoly minimal_polynomial_in(const QuotientAlgebra& A, const Polynomial& g) {
  const PrimeField& F = g.ring()->field();
  std::vector<std::vector<Coeff>> powers;
  Polynomial cur = A.nf(Polynomial::constant(g.ring(), 1));
  for (std::size_t k = 0; k <= A.dim(); ++k) {
    powers.push_back(A.coords(cur));
    Matrix m(A.dim(), powers.size());
    for (std::size_t c = 0; c < powers.size(); ++c)
      for (std::size_t r = 0; r < A.dim(); ++r) m(r, c) = powers[c][r];
    auto ker = linalg::kernel(F, m);
    if (!ker.empty()) {
      UPoly u = ker.front();
      upoly::trim(u);
      return upoly::monic(F, u);
    }
    cur = A.nf(cur * g);
  }
  throw Error(ErrorKind::DecompositionFailure, "minimal polynomial not found");
}

UPoly squarefree_part(const PrimeField& F, const UPoly& u) {
  UPoly out{1};
  for (auto& [q, m] : upoly::factor(F, u)) out = upoly::mul(F, out, q);
  return out;
}

// Components of a radical zero-dimensional ideal via the Frobenius-fixed
// subalgebra: its dimension counts the fields in the product decomposition.
void split_zero_dim(const Ideal& I, std::vector<Ideal>& out) {
  if (I.is_unit()) return;
  const RingPtr& r = I.ring();
  const PrimeField& F = r->field();
  QuotientAlgebra A(I);
  Matrix frob(A.dim(), A.dim());
  for (std::size_t c = 0; c < A.dim(); ++c) {
    auto v = A.coords(A.pow(Polynomial::monomial(r, A.basis()[c]), r->p()));
    for (std::size_t row = 0; row < A.dim(); ++row) frob(row, c) = v[row];
    frob(c, c) = F.sub(frob(c, c), 1);
  }
  auto fixed = linalg::kernel(F, frob);
  if (fixed.size() <= 1) {
    out.push_back(I);
    return;
  }
  for (const auto& v : fixed) {
    Polynomial e = A.element(v);
    if (e.is_constant()) continue;
    for (Coeff c : upoly::roots(F, minimal_polynomial_in(A, e)))
      split_zero_dim(I + std::vector<Polynomial>{e - Polynomial::constant(r, c)}, out);
    return;
  }
  throw Error(ErrorKind::DecompositionFailure, "no splitting element found");
}

std::vector<Ideal> monomial_minimal_primes(const Ideal& I) {
  const RingPtr& r = I.ring();
  std::vector<std::uint32_t> supports;
  for (const auto& g : I.basis()) {
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < r->nvars(); ++v)
      if (g.leading_monomial()[v]) s |= 1u << v;
    supports.push_back(s);
  }
  std::vector<std::uint32_t> covers;
  const std::uint32_t full = 1u << r->nvars();
  std::vector<std::uint32_t> subsets(full);
  for (std::uint32_t s = 0; s < full; ++s) subsets[s] = s;
  std::stable_sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  for (auto s : subsets) {
    if (!std::all_of(supports.begin(), supports.end(), [&](std::uint32_t t) { return (t & s) != 0; }))
      continue;
    if (std::any_of(covers.begin(), covers.end(), [&](std::uint32_t c) { return (c & s) == c; }))
      continue;
    covers.push_back(s);
  }
  std::vector<Ideal> out;
  for (auto s : covers) {
    std::vector<Polynomial> gens;
    for (std::size_t v = 0; v < r->nvars(); ++v)
      if (s & (1u << v)) gens.push_back(Polynomial::variable(r, v));
    out.emplace_back(r, gens);
  }
  return out;
}

std::vector<Ideal> decompose(const Ideal& I, int depth);

// Split off linear basis elements: their leading variables occur nowhere
// else in a reduced basis, so the rest lives in the remaining variables.
std::vector<Ideal> decompose_linear(const Ideal& I, int depth) {
  const RingPtr& r = I.ring();
  std::vector<Polynomial> linear, rest;
  std::vector<bool> pinned(r->nvars(), false);
  for (const auto& g : I.basis()) {
    if (is_linear(g)) {
      linear.push_back(g);
      for (std::size_t v = 0; v < r->nvars(); ++v)
        if (g.leading_monomial()[v]) pinned[v] = true;
    } else {
      rest.push_back(g);
    }
  }
  if (rest.empty()) return {I};
  std::vector<std::size_t> free;
  for (std::size_t v = 0; v < r->nvars(); ++v)
    if (!pinned[v]) free.push_back(v);
  SubRing sub(r, free);
  std::vector<Polynomial> down;
  for (const auto& g : rest) down.push_back(sub.down(g));
  std::vector<Ideal> out;
  for (const auto& P : decompose(Ideal(sub.ring, down), depth)) {
    std::vector<Polynomial> gens = linear;
    for (const auto& g : P.gens()) gens.push_back(sub.up(g, r));
    out.emplace_back(r, gens);
  }
  return out;
}

std::vector<Ideal> decompose(const Ideal& I, int depth) {
  if (depth > 64) throw Error(ErrorKind::DecompositionFailure, "decomposition recursion too deep");
  if (I.is_unit()) return {};
  const auto& basis = I.basis();
  if (basis.empty()) return {I};
  if (std::any_of(basis.begin(), basis.end(), is_linear)) return decompose_linear(I, depth + 1);
  const RingPtr& r = I.ring();
  if (is_monomial_ideal(basis)) return monomial_minimal_primes(I);
  if (basis.size() == 1) {
    std::vector<Ideal> out;
    for (auto& g : irreducible_factors(basis[0])) out.emplace_back(r, std::vector<Polynomial>{g});
    return out;
  }
  if (standard_monomials(I)) {
    std::vector<Ideal> out;
    split_zero_dim(zero_dim_radical(I), out);
    return minimal_elements(out);
  }
  // Split along a reducible basis element.
  for (const auto& g : basis) {
    std::vector<Polynomial> fs;
    try {
      fs = irreducible_factors(g);
    } catch (const Error&) {
      continue;
    }
    if (fs.size() == 1 && fs[0].degree() == g.degree()) continue;
    std::vector<Ideal> out;
    for (const auto& f : fs)
      for (auto& P : decompose(I + std::vector<Polynomial>{f}, depth + 1)) out.push_back(P);
    return minimal_elements(out);
  }
  throw Error(ErrorKind::DecompositionFailure,
              "no built-in strategy decomposes " + I.to_string() + "; supply hints");
}

// Random colon probes: products of low-degree elements outside P stay outside.
bool probe_prime(const Ideal& P) {
  const RingPtr& r = P.ring();
  std::mt19937 rng(91);
  std::uniform_int_distribution<Coeff> coef(0, r->p() - 1);
  auto monos = monomials_of_degree(r->nvars(), 1);
  auto two = monomials_of_degree(r->nvars(), 2);
  monos.insert(monos.end(), two.begin(), two.end());
  monos.push_back(Monomial(r->nvars()));
  auto sample = [&] {
    std::vector<Term> ts;
    for (const auto& m : monos) ts.push_back({m, coef(rng)});
    return Polynomial(r, std::move(ts));
  };
  for (int i = 0; i < 200; ++i) {
    Polynomial a = sample(), b = sample();
    if (P.contains(a) || P.contains(b)) continue;
    if (P.contains(a * b)) return false;
  }
  return true;
}

}  // namespace

UPoly minimal_polynomial(const Polynomial& g, const Ideal& I) {
  return minimal_polynomial_in(QuotientAlgebra(I), g);
}

Ideal zero_dim_radical(const Ideal& I) {
  if (I.is_unit()) return I;
  QuotientAlgebra A(I);
  const RingPtr& r = I.ring();
  std::vector<Polynomial> extra;
  for (std::size_t v = 0; v < r->nvars(); ++v) {
    UPoly m = minimal_polynomial_in(A, Polynomial::variable(r, v));
    extra.push_back(from_upoly(squarefree_part(r->field(), m), r, v));
  }
  return Ideal(r, (I + extra).basis());
}

bool is_prime(const Ideal& I) {
  if (I.is_unit()) return false;
  if (I.is_zero()) return true;
  const auto& basis = I.basis();
  if (std::all_of(basis.begin(), basis.end(), is_linear)) return true;
  auto primes = decompose(I, 0);
  return primes.size() == 1 && primes[0] == I;
}

std::vector<Ideal> minimal_elements(std::vector<Ideal> ideals) {
  std::vector<Ideal> out;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < ideals.size() && keep; ++j) {
      if (i == j) continue;
      if (ideals[i].contains(ideals[j])) {
        // Strictly larger, or an equal ideal seen earlier.
        if (!ideals[j].contains(ideals[i]) || j < i) keep = false;
      }
    }
    if (keep) out.push_back(ideals[i]);
  }
  return out;
}

std::vector<Ideal> minimal_primes(const Ideal& I, const std::vector<Ideal>& hints) {
  if (hints.empty()) {
    std::vector<Ideal> out;
    for (auto& P : decompose(I, 0)) out.push_back(P.canonical());
    return out;
  }
  for (const auto& P : hints) {
    if (!P.contains(I))
      throw Error(ErrorKind::DecompositionFailure, "hint " + P.to_string() + " does not contain I");
    bool prime;
    try {
      prime = is_prime(P);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DecompositionFailure) throw;
      prime = probe_prime(P);
    }
    if (!prime) throw Error(ErrorKind::DecompositionFailure, "hint " + P.to_string() + " is not prime");
  }
  auto mins = minimal_elements(hints);
  if (mins.size() != hints.size())
    throw Error(ErrorKind::DecompositionFailure, "hints are not pairwise incomparable");
  Ideal covered = intersect(hints);
  for (const auto& g : covered.basis())
    if (!radical_membership(g, I))
      throw Error(ErrorKind::DecompositionFailure, "hints do not cover the radical of I");
  std::vector<Ideal> out;
  for (const auto& P : hints) out.push_back(P.canonical());
  return out;
}

}  // namespace fsk

namespace fsk {

std::optional<Polynomial> avoiding_combination(const std::vector<Polynomial>& gens,
                                               const std::vector<Ideal>& avoid,
                                               std::uint64_t limit) {
  if (gens.empty()) return std::nullopt;
  auto outside = [&](const Polynomial& g) {
    if (g.is_zero()) return false;
    for (const auto& P : avoid)
      if (P.contains(g)) return false;
    return true;
  };
  for (const auto& g : gens)
    if (outside(g)) return g;
  const RingPtr& r = gens[0].ring();
  const Coeff p = r->p();
  // Normalized combinations: first nonzero coefficient 1.
  std::uint64_t tried = 0;
  for (std::size_t lead = 0; lead < gens.size(); ++lead) {
    std::vector<Coeff> c(gens.size() - lead - 1, 0);
    for (;;) {
      Polynomial g = gens[lead];
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) g += gens[lead + 1 + i].scaled(c[i]);
      if (outside(g)) return g;
      if (++tried >= limit) return std::nullopt;
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == p) c[i++] = 0;
      if (i == c.size()) break;
    }
  }
  return std::nullopt;
}

}  // namespace fsk

namespace fsk {

std::optional<Polynomial> element_avoiding(const Ideal& B, const std::vector<Ideal>& avoid,
                                            unsigned extra_degree) {
  const auto& base = B.basis();
  if (base.empty()) return std::nullopt;
  if (auto a = avoiding_combination(base, avoid)) return a;
  const RingPtr& r = B.ring();
  std::vector<Polynomial> gens = base;
  for (unsigned k = 1; k <= extra_degree; ++k) {
    for (const auto& m : monomials_of_degree(r->nvars(), k))
      for (const auto& g : base) gens.push_back(g.times_term(m, 1));
    if (auto a = avoiding_combination(gens, avoid)) return a;
  }
  return std::nullopt;
}

}  // namespace fsk
