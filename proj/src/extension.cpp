#include "fsk/extension.hpp"

#include <algorithm>
#include <functional>

#include "fsk/error.hpp"
#include "fsk/linalg.hpp"
#include "fsk/primes.hpp"

namespace fsk {

RingPtr ExtensionPresentation::extension_ring(const RingPresentation& R,
                                              const std::vector<std::string>& names) {
  if (names.empty()) return R.ring;
  return R.ring->with_prefix(names, MonomialOrder::elimination(names.size()));
}

Polynomial ExtensionPresentation::embed(const Polynomial& f) const {
  if (ring == base.ring) return f;
  std::vector<std::size_t> map(base.ring->nvars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = adjoined.size() + i;
  return f.map_variables(ring, map);
}

Ideal ExtensionPresentation::embed(const Ideal& I) const {
  std::vector<Polynomial> g;
  for (const auto& f : I.gens()) g.push_back(embed(f));
  return Ideal(ring, g);
}

Ideal ExtensionPresentation::ideal() const {
  std::vector<Polynomial> g;
  for (const auto& f : base.J.gens()) g.push_back(embed(f));
  g.insert(g.end(), monic.begin(), monic.end());
  g.insert(g.end(), relations.begin(), relations.end());
  return Ideal(ring, g);
}

std::uint32_t ExtensionPresentation::monic_degree(std::size_t i) const {
  return static_cast<std::uint32_t>(monic.at(i).degree_in(i));
}

ExtensionPresentation ExtensionPresentation::identity(const RingPresentation& R) {
  ExtensionPresentation S;
  S.base = R;
  S.ring = R.ring;
  return S;
}

Polynomial avoidance_element(const Ideal& K, const std::vector<Ideal>& inside,
                             const std::vector<Ideal>& avoid) {
  std::vector<Ideal> parts{K};
  parts.insert(parts.end(), inside.begin(), inside.end());
  Ideal B = parts.size() == 1 ? K : intersect(parts);
  auto a = element_avoiding(B, avoid);
  if (!a) throw Error(ErrorKind::AvoidanceFailure, "no element of " + B.to_string() + " avoids the given primes");
  return *a;
}

bool is_parameter_system(const RingPresentation& R, const Ideal& P, const std::vector<Polynomial>& xs) {
  Ideal K = Ideal(R.ring, xs) + R.J;
  if (!P.contains(K)) return false;
  return !P.contains(saturate(K, P));
}

namespace {

std::vector<Monomial> monomials_of(std::size_t n, std::uint32_t deg) {
  std::vector<Monomial> out;
  Monomial m(n);
  auto rec = [&](auto&& self, std::size_t v, std::uint32_t left) -> void {
    if (v + 1 == n) {
      m.set(v, left);
      out.push_back(m);
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      m.set(v, e);
      self(self, v + 1, left - e);
    }
  };
  if (n > 0) rec(rec, 0, deg);
  return out;
}

// F_p-basis of the degree-`deg` part of a homogeneous ideal, in echelon form.
std::vector<Polynomial> graded_piece(const Ideal& B, std::uint32_t deg) {
  const RingPtr& r = B.ring();
  std::vector<Polynomial> spanning;
  for (const auto& g : B.basis()) {
    if (!g.is_homogeneous() || g.degree() > static_cast<long long>(deg)) continue;
    for (const auto& m : monomials_of(r->nvars(), deg - static_cast<std::uint32_t>(g.degree())))
      spanning.push_back(g.times_term(m, 1));
  }
  auto monos = monomials_of(r->nvars(), deg);
  Matrix M(spanning.size(), monos.size());
  for (std::size_t i = 0; i < spanning.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) M(i, j) = spanning[i].coeff_of(monos[j]);
  auto pivots = linalg::rref(r->field(), M);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::vector<Term> ts;
    for (std::size_t j = 0; j < monos.size(); ++j)
      if (M(i, j)) ts.push_back({monos[j], M(i, j)});
    out.emplace_back(r, std::move(ts));
  }
  return out;
}

// Calls fn on normalized combinations of `basis` (first nonzero coefficient
// 1) in a fixed order until fn returns true or `limit` is reached.
bool for_each_combination(const std::vector<Polynomial>& basis, std::uint64_t limit,
                          const std::function<bool(const Polynomial&)>& fn) {
  if (basis.empty()) return false;
  const Coeff p = basis[0].ring()->p();
  std::uint64_t tried = 0;
  for (std::size_t lead = basis.size(); lead-- > 0;) {
    std::vector<Coeff> c(basis.size() - lead - 1, 0);
    for (;;) {
      Polynomial g = basis[lead];
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) g += basis[lead + 1 + i].scaled(c[i]);
      if (fn(g)) return true;
      if (++tried >= limit) return false;
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == p) c[i++] = 0;
      if (i == c.size()) break;
    }
  }
  return false;
}

}  // namespace

std::vector<Polynomial> choose_parameters(const RingPresentation& R, const std::vector<Ideal>& components,
                                          const std::vector<Ideal>& Q) {
  const std::size_t dimJ = dimension(R.J);
  std::vector<std::size_t> height;
  std::size_t N = 0;
  for (const auto& P : components) {
    height.push_back(dimJ - dimension(P));
    N = std::max(N, height.back());
  }
  std::vector<Polynomial> chosen;
  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == N) return true;
    std::vector<Ideal> need;
    for (std::size_t i = 0; i < components.size(); ++i)
      if (height[i] > k) need.push_back(components[i]);
    Ideal B = need.size() == 1 ? need[0] : intersect(need);
    for (std::uint32_t deg = 1; deg <= 2; ++deg) {
      auto piece = graded_piece(B, deg);
      bool done = for_each_combination(piece, 4000, [&](const Polynomial& x) {
        for (const auto& q : Q)
          if (q.contains(x)) return false;
        if ((Ideal(R.ring, chosen) + R.J).contains(x)) return false;
        chosen.push_back(x);
        bool ok = true;
        for (std::size_t i = 0; i < components.size() && ok; ++i)
          if (height[i] == k + 1) ok = is_parameter_system(R, components[i], chosen);
        if (ok && extend(k + 1)) return true;
        chosen.pop_back();
        return false;
      });
      if (done) return true;
    }
    return false;
  };
  if (!extend(0)) throw Error(ErrorKind::AvoidanceFailure, "no parameters avoid the compatible primes");
  return chosen;
}

MonicRelation monicize(const Polynomial& u, const LocalizedFraction& entry, const CechContext& ctx) {
  const std::uint32_t p = static_cast<std::uint32_t>(ctx.R.ring->p());
  std::vector<std::uint32_t> e(ctx.d()), m(ctx.d());
  for (std::size_t i = 0; i < ctx.d(); ++i) {
    e[i] = (entry.exps[i] + p - 1) / p;
    m[i] = p * e[i] - entry.exps[i];
  }
  MonicRelation out;
  out.scale = ctx.param_power(e);
  out.linear = ctx.R.J.normal_form(u * out.scale.pow(p - 1));
  out.constant = ctx.R.J.normal_form(entry.num * ctx.param_power(m));
  return out;
}

EtaleCertificate etale_certificate(const ExtensionPresentation& S, const Ideal& Q) {
  EtaleCertificate cert;
  cert.prime = Q;
  cert.certified = true;
  const std::size_t m = S.nadjoined();
  std::vector<std::size_t> down(S.ring->nvars(), 0);
  for (std::size_t i = 0; i < S.base.ring->nvars(); ++i) down[m + i] = i;
  for (std::size_t v = 0; v < m; ++v) {
    Polynomial d = S.monic[v].derivative(v);
    bool in_base = true;
    for (const auto& t : d.terms())
      for (std::size_t i = 0; i < m; ++i)
        if (t.mono[i]) in_base = false;
    EtaleWitness w{v, S.monic[v], Polynomial(S.base.ring), Polynomial(S.base.ring)};
    if (in_base) {
      w.derivative = d.map_variables(S.base.ring, down);
      w.normal_form = Q.normal_form(w.derivative);
    }
    if (w.normal_form.is_zero() && cert.certified) {
      cert.certified = false;
      cert.failure = S.monic[v].to_string();
    }
    cert.witnesses.push_back(std::move(w));
  }
  return cert;
}

namespace {

struct ComponentPlan {
  Ideal prime;
  unsigned height = 0;
  SocleDatum socle;
  CechCochain beta;
  std::vector<std::optional<MonicRelation>> roots;  // per beta entry; nullopt when zero
};

std::string join_name(const std::string& stem, std::size_t comp, std::size_t ncomp,
                      std::optional<std::size_t> entry) {
  std::string n = stem;
  if (ncomp > 1) n += std::to_string(comp + 1);
  if (entry) n += "_" + std::to_string(*entry + 1);
  return n;
}

Coeff evaluate(const Polynomial& f, const std::vector<Coeff>& a, std::size_t offset = 0) {
  const PrimeField& F = f.ring()->field();
  Coeff acc = 0;
  for (const auto& t : f.terms()) {
    Coeff v = t.coeff;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (t.mono[offset + i]) v = F.mul(v, F.pow(a[i], t.mono[offset + i]));
    acc = F.add(acc, v);
  }
  return acc;
}

// Smooth closed points of R cut out by the lines x_i = a_i x_1 + b_i,
// produced on demand and cached.
class ClosedPoints {
 public:
  explicit ClosedPoints(const RingPresentation& R) : R_(R), ab_(2 * (R.ring->nvars() - 1), 0) {
    const std::size_t n = R.ring->nvars();
    if (n - dimension(R.J) != 1)
      throw Error(ErrorKind::Unsupported, "domain certificates need a hypersurface");
    for (const auto& g : R.J.basis())
      for (std::size_t v = 0; v < n; ++v) minors_.push_back(g.derivative(v));
  }

  // Point number i, or nullptr when every line has been used.
  const Ideal* at(std::size_t i) {
    while (points_.size() <= i && next_line()) {
    }
    return i < points_.size() ? &points_[i] : nullptr;
  }

 private:
  bool next_line() {
    if (done_) return false;
    const RingPtr& r = R_.ring;
    const Coeff p = r->p();
    std::size_t i = 0;
    while (i < ab_.size() && ++ab_[i] == p) ab_[i++] = 0;
    if (i == ab_.size()) {
      done_ = true;
      return false;
    }
    std::vector<Polynomial> lin = R_.J.gens();
    const Polynomial x1 = Polynomial::variable(r, 0);
    for (std::size_t k = 0; 2 * k < ab_.size(); ++k)
      lin.push_back(Polynomial::variable(r, k + 1) - x1.scaled(ab_[2 * k]) -
                    Polynomial::constant(r, ab_[2 * k + 1]));
    Ideal L(r, lin);
    if (L.is_unit() || dimension(L) != 0) return true;
    for (const auto& m : minimal_primes(L))
      if ((m + minors_).is_unit() && std::find(points_.begin(), points_.end(), m) == points_.end())
        points_.push_back(m);
    return true;
  }

  const RingPresentation& R_;
  std::vector<Coeff> ab_;
  std::vector<Polynomial> minors_;
  std::vector<Ideal> points_;
  bool done_ = false;
};

// Is the fiber of R[T_F]/(monic relations of F) at the closed point m a field?
bool fiber_is_field(const ExtensionPresentation& S, const std::vector<std::size_t>& F, const Ideal& m) {
  std::vector<Polynomial> gens;
  for (const auto& g : m.gens()) gens.push_back(S.embed(g));
  for (std::size_t v = 0; v < S.nadjoined(); ++v)
    gens.push_back(std::find(F.begin(), F.end(), v) != F.end() ? S.monic[v] : S.variable(v));
  return is_prime(Ideal(S.ring, gens));
}

// Quotient of S by a minimal prime over the root w = rho of g, certified to
// be a domain into which R injects.
void select_domain(BuildResult& out) {
  const ExtensionPresentation& S = out.S;
  const RingPresentation& R = S.base;
  if (!is_prime(R.J)) throw Error(ErrorKind::DomainSelectionFailure, "domain mode needs R to be a domain");
  if (S.birational.size() != 1)
    throw Error(ErrorKind::DomainSelectionFailure, "domain mode supports one component of positive height");
  const auto bir = S.birational[0];
  const std::size_t Tw = bir.var;
  const Coeff p = R.ring->p();

  // Roots of g = T^p - uT in F_p: 0, and more when u is a constant.
  std::vector<Coeff> rhos{0};
  const Polynomial gw = S.monic[Tw];
  bool constant = true;
  for (const auto& t : gw.terms())
    for (std::size_t i = 0; i < S.ring->nvars(); ++i)
      if (i != Tw && t.mono[i]) constant = false;
  if (constant)
    for (Coeff r = 1; r < p; ++r) {
      std::vector<Coeff> at(S.ring->nvars(), 0);
      at[Tw] = r;
      if (evaluate(gw, at) == 0) rhos.push_back(r);
    }

  std::vector<std::size_t> vars(S.nadjoined());
  for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
  const Ideal SI = S.ideal();
  ClosedPoints points(R);

  for (Coeff rho : rhos) {
    const Polynomial crho = bir.c - bir.X.scaled(rho);
    for (std::size_t k = S.nadjoined(); k-- > 0;) {
      if (k == Tw || crho.degree_in(k) != 1) continue;
      Polynomial coef = crho.derivative(k);
      bool free_coef = true;
      for (const auto& t : coef.terms())
        for (std::size_t i = 0; i < S.nadjoined(); ++i)
          if (t.mono[i]) free_coef = false;
      if (!free_coef || SI.contains(coef)) continue;
      Polynomial rest = crho - coef * S.variable(k);

      std::vector<std::size_t> F;
      for (std::size_t v = 0; v < S.nadjoined(); ++v)
        if (v != k && v != Tw) F.push_back(v);
      std::vector<Polynomial> gens;
      for (const auto& f : R.J.gens()) gens.push_back(S.embed(f));
      for (auto v : F) gens.push_back(S.monic[v]);
      gens.push_back(S.variable(Tw) - Polynomial::constant(S.ring, rho));
      gens.push_back(coef * S.variable(k) + rest);
      Ideal prime = saturate(Ideal(S.ring, gens), coef);
      if (!prime.contains(SI)) continue;

      Ideal kernel_up = eliminate(prime, vars);
      std::vector<std::size_t> down(S.ring->nvars(), 0);
      for (std::size_t i = 0; i < R.ring->nvars(); ++i) down[S.nadjoined() + i] = i;
      std::vector<Polynomial> kg;
      for (const auto& g : kernel_up.basis()) kg.push_back(g.map_variables(R.ring, down));
      Ideal kernel(R.ring, kg);
      if (kernel != R.J) continue;

      const Ideal* point = nullptr;
      for (std::size_t i = 0; const Ideal* a = points.at(i); ++i)
        if (fiber_is_field(S, F, *a)) {
          point = a;
          break;
        }
      if (!point) continue;

      ExtensionPresentation D = S;
      D.monic[Tw] = S.variable(Tw) - Polynomial::constant(S.ring, rho);
      D.free_over_base.assign(S.nadjoined(), true);
      D.free_over_base[k] = false;
      D.birational = {{k, -rest, coef}};
      Ideal known = Ideal(S.ring, gens) + std::vector<Polynomial>{S.monic[k]};
      D.relations.clear();
      for (const auto& g : prime.basis())
        if (!known.contains(g)) D.relations.push_back(g);
      D.relations.push_back(coef * S.variable(k) + rest);
      out.S = std::move(D);
      out.injectivity_kernel = kernel;
      out.domain_point = *point;
      return;
    }
  }
  throw Error(ErrorKind::DomainSelectionFailure, "no certified domain quotient found");
}

}  // namespace

BuildResult build_extension(const RingPresentation& R, const Ideal& I, const BuildOptions& opts) {
  if (!fedder_is_fpure(R, R.irrelevant()))
    throw Error(ErrorKind::InvalidArgument, "the ring is not F-pure");
  const FrobeniusDatum fd = fedder_element(R);
  const Ideal IJ = Ideal(R.ring, (I + R.J).basis());
  if (!is_compatible(IJ, fd, R)) throw Error(ErrorKind::InvalidArgument, "ideal is not compatible");

  BuildResult out;
  out.S = ExtensionPresentation::identity(R);
  if (IJ.is_unit()) return out;

  out.components = minimal_primes(IJ, opts.component_hints);
  CompatibleLattice lattice = enumerate_compatible(fd, R, opts.enumerate);
  for (const auto& P : lattice.primes)
    if (!P.contains(IJ)) out.avoid.push_back(P);

  const std::size_t dimJ = dimension(R.J);
  std::vector<Ideal> positive;
  for (const auto& P : out.components)
    if (dimension(P) < dimJ) positive.push_back(P);
  if (!positive.empty()) out.params = choose_parameters(R, positive, out.avoid);

  // Socle data, coboundaries and monic relations, component by component.
  std::vector<ComponentPlan> plans;
  for (const auto& P : out.components) {
    ComponentPlan plan;
    plan.prime = P;
    plan.height = static_cast<unsigned>(dimJ - dimension(P));
    if (plan.height > 0) {
      std::vector<Polynomial> xs(out.params.begin(), out.params.begin() + plan.height);
      SocleDatum s = socle_datum(R, P, xs, out.avoid);
      s = adjust_u(s, R, out.components, out.avoid);
      s = globalize(s, R, opts.globalize_power);
      if (!certify_socle(s, R))
        throw Error(ErrorKind::CertificateFailure, "socle certificate failed at " + P.to_string());
      for (const auto& q : out.avoid)
        if (q.contains(s.u)) throw Error(ErrorKind::AvoidanceFailure, "u lies in " + q.to_string());
      CechContext ctx(R, xs);
      plan.beta = solve_coboundary(s.u, s.alpha, ctx);
      for (const auto& e : plan.beta.entries) {
        if (e.num.is_zero()) plan.roots.push_back(std::nullopt);
        else plan.roots.push_back(monicize(s.u, e, ctx));
      }
      plan.socle = std::move(s);
    }
    plans.push_back(std::move(plan));
  }

  // Variable layout: per component, its roots then its socle variable.
  std::vector<std::string> names;
  std::vector<std::vector<std::optional<std::size_t>>> root_var(plans.size());
  std::vector<std::size_t> socle_var(plans.size(), 0);
  for (std::size_t j = 0; j < plans.size(); ++j) {
    if (plans[j].height == 0) continue;
    for (std::size_t k = 0; k < plans[j].roots.size(); ++k) {
      if (!plans[j].roots[k]) {
        root_var[j].push_back(std::nullopt);
        continue;
      }
      root_var[j].push_back(names.size());
      names.push_back(join_name("T", j, plans.size(), k));
    }
    socle_var[j] = names.size();
    names.push_back(join_name("T", j, plans.size(), std::nullopt));
  }

  ExtensionPresentation& S = out.S;
  S.ring = ExtensionPresentation::extension_ring(R, names);
  S.adjoined = names;
  S.monic.assign(names.size(), Polynomial(S.ring));
  S.free_over_base.assign(names.size(), true);
  auto embed = [&](const Polynomial& f) { return S.embed(f); };
  const std::uint64_t p = R.ring->p();

  for (std::size_t j = 0; j < plans.size(); ++j)
    for (std::size_t k = 0; k < root_var[j].size(); ++k)
      if (root_var[j][k]) S.monic[*root_var[j][k]] = plans[j].roots[k]->in(S.ring, *root_var[j][k], embed);

  // R' = R[roots]/(monic relations); free over R.
  std::vector<Polynomial> rprime_gens;
  for (const auto& f : R.J.gens()) rprime_gens.push_back(embed(f));
  for (std::size_t v = 0; v < names.size(); ++v)
    if (!S.monic[v].is_zero()) rprime_gens.push_back(S.monic[v]);
  const RingPresentation Rprime(S.ring, Ideal(S.ring, rprime_gens));

  std::vector<Polynomial> birational_gens = rprime_gens;
  Polynomial all_X = Polynomial::constant(S.ring, 1);
  for (std::size_t j = 0; j < plans.size(); ++j) {
    const ComponentPlan& plan = plans[j];
    if (plan.height == 0) continue;
    const std::size_t d = plan.height;
    std::vector<Polynomial> xs;
    for (std::size_t i = 0; i < d; ++i) xs.push_back(embed(out.params[i]));
    CechContext ctx(Rprime, xs);
    // beta-bar: entry k is t_k / E_k.
    CechCochain bbar = zero_cochain(ctx, static_cast<unsigned>(d - 1));
    for (std::size_t k = 0; k < bbar.entries.size(); ++k) {
      if (!root_var[j][k]) continue;
      const auto& e = plan.beta.entries[k];
      std::vector<std::uint32_t> ex(d);
      for (std::size_t i = 0; i < d; ++i) ex[i] = static_cast<std::uint32_t>((e.exps[i] + p - 1) / p);
      bbar.entries[k] = {S.variable(*root_var[j][k]), ex};
    }
    CechCochain alpha{static_cast<unsigned>(d), {{embed(plan.socle.lambda), std::vector<std::uint32_t>(d, 1)}}};
    CechCochain w = cochain_sub(alpha, cech_differential(bbar, ctx), ctx);
    const Polynomial u = embed(plan.socle.u);
    if (!cochain_is_zero(apply_additive(u, w, ctx), ctx))
      throw Error(ErrorKind::CertificateFailure, "g(alpha - d beta) is not zero at " + plan.prime.to_string());
    const Polynomial X = ctx.param_power(w.entries[0].exps);
    const Polynomial c = w.entries[0].num;

    std::vector<Polynomial> xs_base(out.params.begin(), out.params.begin() + d);
    Polynomial X_base = CechContext(R, xs_base).param_power(w.entries[0].exps);
    if (quotient(R.J, X_base) != R.J)
      throw Error(ErrorKind::InvalidArgument, "parameter product is a zerodivisor");

    const std::size_t v = socle_var[j];
    const Polynomial T = S.variable(v);
    S.monic[v] = T.pow(p) - u * T;
    S.free_over_base[v] = false;
    S.birational.push_back({v, c, X});
    birational_gens.push_back(X * T - c);
    all_X *= X;
  }

  std::vector<Polynomial> rel;
  if (!S.birational.empty()) {
    Ideal sat = saturate(Ideal(S.ring, birational_gens), all_X);
    Ideal known = Ideal(S.ring, rprime_gens) + std::vector<Polynomial>(S.monic.begin(), S.monic.end());
    for (const auto& g : sat.basis())
      if (!known.contains(g)) rel.push_back(g);
  }
  for (const auto& plan : plans)
    if (plan.height == 0) {
      // Kill the component: S_P = 0 while S_Q = R_Q for Q not containing P.
      Ideal other = saturate(R.J, plan.prime);
      for (const auto& g : other.basis()) rel.push_back(embed(g));
      S.birational.clear();
    }
  S.relations = std::move(rel);

  const Ideal SI = S.ideal();
  if (SI.is_unit()) throw Error(ErrorKind::CertificateFailure, "extension collapsed to zero");
  for (std::size_t j = 0; j < plans.size(); ++j) {
    ComponentWitness cw;
    cw.prime = plans[j].prime;
    cw.height = plans[j].height;
    if (plans[j].height > 0) {
      cw.socle = plans[j].socle;
      cw.var = socle_var[j];
      std::vector<Polynomial> xs;
      for (std::size_t i = 0; i < cw.height; ++i) xs.push_back(embed(out.params[i]));
      CechContext sctx(RingPresentation(S.ring, SI), xs, embed(cw.socle.h));
      CechCochain a{cw.height, {{embed(cw.socle.lambda), std::vector<std::uint32_t>(cw.height, 1)}}};
      cw.class_dies = class_is_zero(a, sctx);
    } else {
      // S_P = 0: some element outside P vanishes in S.
      Ideal killer = saturate(R.J, plans[j].prime);
      for (const auto& g : killer.basis())
        if (!plans[j].prime.contains(g) && SI.contains(embed(g))) cw.class_dies = true;
    }
    out.witnesses.push_back(std::move(cw));
  }
  if (opts.domain) {
    select_domain(out);
    const Ideal DI = out.S.ideal();
    for (auto& cw : out.witnesses) {
      if (cw.height == 0) continue;
      std::vector<Polynomial> xs;
      for (std::size_t i = 0; i < cw.height; ++i) xs.push_back(out.S.embed(out.params[i]));
      CechContext dctx(RingPresentation(out.S.ring, DI), xs, out.S.embed(cw.socle.h));
      CechCochain a{cw.height, {{out.S.embed(cw.socle.lambda), std::vector<std::uint32_t>(cw.height, 1)}}};
      cw.class_dies = class_is_zero(a, dctx);
    }
  }
  for (const auto& q : out.avoid) out.etale.push_back(etale_certificate(out.S, q));
  return out;
}

}  // namespace fsk
