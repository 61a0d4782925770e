#include "fsk/cech.hpp"

#include <algorithm>

#include "fsk/error.hpp"
#include "fsk/primes.hpp"

namespace fsk {

namespace {

Polynomial product_of(const std::vector<Polynomial>& fs, const RingPtr& r) {
  Polynomial out = Polynomial::constant(r, 1);
  for (const auto& f : fs) out *= f;
  return out;
}

std::vector<Polynomial> powers(const std::vector<Polynomial>& fs, std::uint32_t s) {
  std::vector<Polynomial> out;
  for (const auto& f : fs) out.push_back(f.pow(s));
  return out;
}

std::size_t subset_index(const std::vector<std::vector<std::size_t>>& subsets,
                         const std::vector<std::size_t>& T) {
  auto it = std::find(subsets.begin(), subsets.end(), T);
  return static_cast<std::size_t>(it - subsets.begin());
}

// a/x^ea + sign * b/x^eb over the common denominator.
LocalizedFraction combine(const LocalizedFraction& a, const LocalizedFraction& b, bool subtract,
                          const CechContext& ctx) {
  const std::size_t d = ctx.d();
  std::vector<std::uint32_t> m(d), da(d), db(d);
  for (std::size_t i = 0; i < d; ++i) {
    m[i] = std::max(a.exps[i], b.exps[i]);
    da[i] = m[i] - a.exps[i];
    db[i] = m[i] - b.exps[i];
  }
  Polynomial na = a.num * ctx.param_power(da);
  Polynomial nb = b.num * ctx.param_power(db);
  return {ctx.R.J.normal_form(subtract ? na - nb : na + nb), m};
}

}  // namespace

CechContext::CechContext(RingPresentation r, std::vector<Polynomial> ps,
                         std::optional<Polynomial> loc)
    : R(std::move(r)), params(std::move(ps)), h(loc ? *loc : R.one()) {
  for (const auto& x : params)
    if (x.ring() != R.ring) throw Error(ErrorKind::RingMismatch, "parameter in a different ring");
}

Polynomial CechContext::param_power(const std::vector<std::uint32_t>& exps) const {
  Polynomial out = R.one();
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i]) out *= params[i].pow(exps[i]);
  return out;
}

Ideal CechContext::local_power_ideal(std::uint32_t s) const {
  if (auto it = cache_->find(s); it != cache_->end()) return it->second;
  const Polynomial X = product_of(params, R.ring);
  Ideal L = Ideal(R.ring, powers(params, s)) + R.J;
  // Ascending chain; the first repeat is taken as its limit.
  for (std::uint32_t k = 1; k <= 16; ++k) {
    Ideal next = quotient(Ideal(R.ring, powers(params, s + k)) + R.J, X.pow(k));
    if (L.contains(next)) break;
    L = next;
  }
  if (!h.is_constant()) L = saturate(L, h);
  L = Ideal(R.ring, L.basis());
  cache_->emplace(s, L);
  return L;
}

std::vector<std::vector<std::size_t>> cech_subsets(std::size_t d, std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  if (t > d) return out;
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == d - t + i - 1) --i;
    if (i == 0) return out;
    ++idx[i - 1];
    for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

CechCochain zero_cochain(const CechContext& ctx, unsigned level) {
  CechCochain c{level, {}};
  const std::size_t n = cech_subsets(ctx.d(), level).size();
  for (std::size_t i = 0; i < n; ++i)
    c.entries.push_back({Polynomial(ctx.R.ring), std::vector<std::uint32_t>(ctx.d(), 0)});
  return c;
}

CechCochain top_cochain(const CechContext& ctx, const Polynomial& num, std::uint32_t s) {
  CechCochain c{static_cast<unsigned>(ctx.d()), {}};
  c.entries.push_back({ctx.R.J.normal_form(num), std::vector<std::uint32_t>(ctx.d(), s)});
  return c;
}

CechCochain cech_differential(const CechCochain& c, const CechContext& ctx) {
  const std::size_t d = ctx.d();
  if (c.level >= d) return zero_cochain(ctx, c.level + 1);
  const auto src = cech_subsets(d, c.level);
  const auto dst = cech_subsets(d, c.level + 1);
  if (c.entries.size() != src.size())
    throw Error(ErrorKind::LengthMismatch, "cochain has the wrong number of entries");
  CechCochain out = zero_cochain(ctx, c.level + 1);
  for (std::size_t t = 0; t < dst.size(); ++t) {
    const auto& T = dst[t];
    LocalizedFraction acc = out.entries[t];
    for (std::size_t k = 0; k < T.size(); ++k) {
      std::vector<std::size_t> face = T;
      face.erase(face.begin() + static_cast<long>(k));
      acc = combine(acc, c.entries[subset_index(src, face)], k % 2 == 1, ctx);
    }
    out.entries[t] = std::move(acc);
  }
  return out;
}

CechCochain cochain_sub(const CechCochain& a, const CechCochain& b, const CechContext& ctx) {
  if (a.level != b.level || a.entries.size() != b.entries.size())
    throw Error(ErrorKind::LengthMismatch, "cochains at different levels");
  CechCochain out{a.level, {}};
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    out.entries.push_back(combine(a.entries[i], b.entries[i], true, ctx));
  return out;
}

bool cochain_is_zero(const CechCochain& c, const CechContext& ctx) {
  const auto subsets = cech_subsets(ctx.d(), c.level);
  for (std::size_t t = 0; t < subsets.size(); ++t) {
    const Polynomial& num = c.entries[t].num;
    if (ctx.R.J.contains(num)) continue;
    std::vector<Polynomial> xs;
    for (auto i : subsets[t]) xs.push_back(ctx.params[i]);
    if (xs.empty()) return false;
    Ideal local = saturate(ctx.R.J, product_of(xs, ctx.R.ring));
    if (!local.contains(num)) return false;
  }
  return true;
}

namespace {

// The single entry of a top cochain as a / (x_1..x_d)^s.
std::pair<Polynomial, std::uint32_t> normalized_top(const CechCochain& c, const CechContext& ctx) {
  if (c.level != ctx.d() || c.entries.size() != 1)
    throw Error(ErrorKind::InvalidArgument, "expected a top-level cochain");
  const auto& e = c.entries[0];
  std::uint32_t s = 0;
  for (auto v : e.exps) s = std::max(s, v);
  std::vector<std::uint32_t> lift(ctx.d());
  for (std::size_t i = 0; i < ctx.d(); ++i) lift[i] = s - e.exps[i];
  return {ctx.R.J.normal_form(e.num * ctx.param_power(lift)), s};
}

}  // namespace

bool class_is_zero(const CechCochain& c, const CechContext& ctx) {
  auto [a, s] = normalized_top(c, ctx);
  if (a.is_zero()) return true;
  if (s == 0 && ctx.d() > 0) return true;  // a global element
  return ctx.local_power_ideal(s).contains(a);
}

namespace {

std::vector<std::uint32_t> exps_of(const Monomial& m) {
  std::vector<std::uint32_t> v(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) v[i] = m[i];
  return v;
}

std::vector<Monomial> all_monomials(std::size_t n, long deg) {
  std::vector<Monomial> out;
  if (deg < 0 || n == 0) return out;
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
  rec(rec, 0, static_cast<std::uint32_t>(deg));
  return out;
}

// Monomials of the given degree outside the initial ideal of J.
std::vector<Monomial> standard_of_degree(const Ideal& J, long deg) {
  std::vector<Monomial> out;
  const auto& gb = J.basis();
  for (const auto& m : all_monomials(J.ring()->nvars(), deg)) {
    bool standard = true;
    for (const auto& g : gb)
      if (g.leading_monomial().divides(m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
  }
  return out;
}

void require_graded(const CechContext& ctx) {
  if (!ctx.R.J.is_homogeneous() || !ctx.h.is_constant())
    throw Error(ErrorKind::Unsupported, "graded strands need a homogeneous ring at the irrelevant ideal");
  for (const auto& x : ctx.params)
    if (!x.is_homogeneous() || x.is_zero() || x.degree() < 1)
      throw Error(ErrorKind::Unsupported, "graded strands need homogeneous parameters");
}

long total_param_degree(const CechContext& ctx) {
  long D = 0;
  for (const auto& x : ctx.params) D += static_cast<long>(x.degree());
  return D;
}

}  // namespace

GradedStrand strand_at(const CechContext& ctx, long degree, std::uint32_t s) {
  require_graded(ctx);
  GradedStrand st;
  st.degree = degree;
  st.s = s;
  const long N = degree + static_cast<long>(s) * total_param_degree(ctx);
  st.basis = standard_of_degree(ctx.R.J, N);
  std::map<std::vector<std::uint32_t>, std::size_t> row;
  for (std::size_t i = 0; i < st.basis.size(); ++i) row[exps_of(st.basis[i])] = i;

  std::vector<std::vector<std::pair<std::size_t, Coeff>>> cols;
  for (const auto& x : ctx.params) {
    const Polynomial xs = x.pow(s);
    for (const auto& m : standard_of_degree(ctx.R.J, N - static_cast<long>(s) * x.degree())) {
      Polynomial img = ctx.R.J.normal_form(xs.times_term(m, 1));
      std::vector<std::pair<std::size_t, Coeff>> col;
      for (const auto& t : img.terms()) col.push_back({row.at(exps_of(t.mono)), t.coeff});
      if (!col.empty()) cols.push_back(std::move(col));
    }
  }
  st.boundary = Matrix(st.basis.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) st.boundary(r, c) = v;
  st.rank = st.basis.empty() || cols.empty() ? 0 : linalg::rank(ctx.R.ring->field(), st.boundary);
  return st;
}

GradedStrand strand_cohomology(const CechContext& ctx, long degree,
                               std::optional<std::uint32_t> s_start,
                               std::optional<std::uint32_t> cap) {
  const std::uint32_t p = static_cast<std::uint32_t>(ctx.R.ring->p());
  const std::uint32_t limit = cap ? *cap : p * p * p;
  std::uint32_t s = s_start ? *s_start : std::max<std::uint32_t>(p, static_cast<std::uint32_t>(std::labs(degree)) + 1);
  GradedStrand prev = strand_at(ctx, degree, s);
  for (;;) {
    if (2 * s > limit)
      throw Error(ErrorKind::BoundExceeded, "strand dimension did not stabilize below the cap");
    s *= 2;
    GradedStrand next = strand_at(ctx, degree, s);
    if (next.dimension() == prev.dimension()) return next;
    prev = std::move(next);
  }
}

bool strand_class_is_zero(const CechCochain& c, const CechContext& ctx) {
  require_graded(ctx);
  auto [a, s] = normalized_top(c, ctx);
  if (a.is_zero()) return true;
  if (!a.is_homogeneous())
    throw Error(ErrorKind::InvalidArgument, "strand test needs a homogeneous numerator");
  if (s == 0 && ctx.d() > 0) return true;
  const long D = total_param_degree(ctx);
  const long degree = static_cast<long>(a.degree()) - static_cast<long>(s) * D;
  const Polynomial X = product_of(ctx.params, ctx.R.ring);
  // Level s, then level 2s to absorb non-Cohen-Macaulay kernels.
  for (std::uint32_t shift : {0u, s}) {
    const Polynomial num = ctx.R.J.normal_form(a * X.pow(shift));
    if (num.is_zero()) return true;
    GradedStrand st = strand_at(ctx, degree, s + shift);
    std::map<std::vector<std::uint32_t>, std::size_t> row;
    for (std::size_t i = 0; i < st.basis.size(); ++i) row[exps_of(st.basis[i])] = i;
    std::vector<Coeff> v(st.basis.size(), 0);
    for (const auto& t : num.terms()) v[row.at(exps_of(t.mono))] = t.coeff;
    if (st.boundary.cols() > 0 && linalg::solve(ctx.R.ring->field(), st.boundary, v)) return true;
  }
  return false;
}

CechCochain apply_additive(const Polynomial& u, const CechCochain& alpha, const CechContext& ctx) {
  if (alpha.level != ctx.d() || alpha.entries.size() != 1)
    throw Error(ErrorKind::InvalidArgument, "expected a top-level cochain");
  const auto& e = alpha.entries[0];
  const std::uint32_t p = static_cast<std::uint32_t>(ctx.R.ring->p());
  std::vector<std::uint32_t> up(ctx.d()), pe(ctx.d());
  for (std::size_t i = 0; i < ctx.d(); ++i) {
    up[i] = (p - 1) * e.exps[i];
    pe[i] = p * e.exps[i];
  }
  Polynomial num = e.num.pow(p) - u * e.num * ctx.param_power(up);
  return {alpha.level, {{ctx.R.J.normal_form(num), pe}}};
}

CechCochain solve_coboundary(const Polynomial& u, const CechCochain& alpha, const CechContext& ctx) {
  const std::size_t d = ctx.d();
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "no coboundaries below level 0");
  CechCochain g = apply_additive(u, alpha, ctx);
  const auto& top = g.entries[0];
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back(ctx.params[i].pow(top.exps[i]));
  for (const auto& j : ctx.R.J.basis()) gens.push_back(j);
  auto cof = lift(top.num, gens);
  if (!cof)
    throw Error(ErrorKind::BoundExceeded, "g(alpha) numerator is not in the global parameter ideal");
  const auto faces = cech_subsets(d, d - 1);
  CechCochain beta = zero_cochain(ctx, static_cast<unsigned>(d - 1));
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<std::size_t> face;
    std::vector<std::uint32_t> exps(d, 0);
    for (std::size_t j = 0; j < d; ++j)
      if (j != k) {
        face.push_back(j);
        exps[j] = top.exps[j];
      }
    Polynomial c = ctx.R.J.normal_form((*cof)[k]);
    beta.entries[subset_index(faces, face)] = {k % 2 == 0 ? c : -c, exps};
  }
  if (!cochain_is_zero(cochain_sub(cech_differential(beta, ctx), g, ctx), ctx))
    throw Error(ErrorKind::CertificateFailure, "coboundary check failed");
  return beta;
}

SocleDatum socle_datum(const RingPresentation& R, const Ideal& P,
                       const std::vector<Polynomial>& params, const std::vector<Ideal>& avoid) {
  const RingPtr& r = R.ring;
  const std::uint32_t p = static_cast<std::uint32_t>(r->p());
  const std::size_t d = params.size();
  if (!P.contains(R.J)) throw Error(ErrorKind::InvalidArgument, "prime does not contain J");
  if (dimension(R.J) != dimension(P) + d)
    throw Error(ErrorKind::InvalidArgument, "parameter count differs from the height of the prime");

  Ideal xJ = Ideal(r, params) + R.J;
  Ideal others = saturate(xJ, P);
  Polynomial h = R.one();
  if (!others.is_unit()) {
    std::vector<Ideal> all_avoid{P};
    all_avoid.insert(all_avoid.end(), avoid.begin(), avoid.end());
    auto found = element_avoiding(others, all_avoid);
    if (!found) found = element_avoiding(others, {P});
    if (!found) throw Error(ErrorKind::AvoidanceFailure, "no localizing element outside the prime");
    h = *found;
  }
  CechContext ctx(R, params, h);
  Ideal Q1 = ctx.local_power_ideal(1);
  for (const auto& g : P.gens())
    if (!radical_membership(g, Q1))
      throw Error(ErrorKind::InvalidArgument, "parameters are not a system of parameters at the prime");

  Ideal C1 = quotient(Q1, P);
  std::vector<Polynomial> cands;
  for (const auto& g : C1.basis())
    if (!Q1.contains(g)) cands.push_back(g);
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  Polynomial lambda(r);
  if (!cands.empty()) {
    lambda = cands.front();
  } else if (auto c = avoiding_combination(C1.basis(), {Q1})) {
    lambda = *c;
  } else {
    throw Error(ErrorKind::SocleNotOneDimensional, "socle of the top local cohomology is zero");
  }
  if (P.contains(quotient(Q1 + std::vector<Polynomial>{lambda}, C1)))
    throw Error(ErrorKind::SocleNotOneDimensional, "socle at " + P.to_string() + " has dimension above 1");

  const Polynomial X = product_of(params, r);
  const Ideal Qp = ctx.local_power_ideal(p);
  auto u_for = [&](const Polynomial& lam) -> std::optional<Polynomial> {
    std::vector<Polynomial> gens{lam * X.pow(p - 1)};
    for (const auto& q : Qp.basis()) gens.push_back(q);
    auto cof = lift(lam.pow(p), gens);
    if (!cof) return std::nullopt;
    return R.J.normal_form((*cof)[0]);
  };
  auto holds = [&](const Polynomial& lam, const Polynomial& u) {
    return Qp.contains(lam.pow(p) - u * lam * X.pow(p - 1));
  };

  std::optional<Polynomial> u = u_for(lambda);
  if (!u) {
    Ideal C = quotient(Ideal(r, {lambda * X.pow(p - 1)}) + Qp, lambda.pow(p));
    auto b = element_avoiding(C, {P});
    if (!b) throw Error(ErrorKind::NoUSolution, "Frobenius does not preserve the socle at " + P.to_string());
    Polynomial lam2 = *b * lambda;
    std::vector<Polynomial> gens{lambda * X.pow(p - 1)};
    for (const auto& q : Qp.basis()) gens.push_back(q);
    auto cof = lift(*b * lambda.pow(p), gens);
    if (!cof) throw Error(ErrorKind::NoUSolution, "lift failed after clearing denominators");
    u = R.J.normal_form(b->pow(p - 2) * (*cof)[0]);
    lambda = lam2;
  }
  // Prefer the homogeneous component of the expected degree.
  if (R.J.is_homogeneous() && lambda.is_homogeneous() && h.is_homogeneous()) {
    long D = 0;
    bool graded = true;
    for (const auto& x : params) {
      graded = graded && x.is_homogeneous();
      D += static_cast<long>(x.degree());
    }
    const long deg = static_cast<long>(p - 1) * (static_cast<long>(lambda.degree()) - D);
    if (graded && deg >= 0) {
      Polynomial uh = u->homogeneous_part(static_cast<std::uint64_t>(deg));
      if (holds(lambda, uh)) u = uh;
    }
  }
  if (P.contains(*u))
    throw Error(ErrorKind::NoUSolution, "Frobenius kills the socle at " + P.to_string());

  SocleDatum out;
  out.prime = P;
  out.height = static_cast<unsigned>(d);
  out.params = params;
  out.h = h;
  out.lambda = lambda;
  out.alpha = CechCochain{static_cast<unsigned>(d), {{lambda, std::vector<std::uint32_t>(d, 1)}}};
  out.u = *u;
  return out;
}

bool certify_socle(const SocleDatum& datum, const RingPresentation& R) {
  CechContext ctx = datum.context(R);
  if (class_is_zero(datum.alpha, ctx)) return false;
  for (const auto& g : datum.prime.gens()) {
    CechCochain ga = datum.alpha;
    ga.entries[0].num = R.J.normal_form(g * ga.entries[0].num);
    if (!class_is_zero(ga, ctx)) return false;
  }
  return class_is_zero(apply_additive(datum.u, datum.alpha, ctx), ctx);
}

SocleDatum adjust_u(const SocleDatum& datum, const RingPresentation& R,
                    const std::vector<Ideal>& components, const std::vector<Ideal>& Q) {
  std::vector<Ideal> maximal;
  for (std::size_t i = 0; i < Q.size(); ++i) {
    bool top = true;
    for (std::size_t j = 0; j < Q.size() && top; ++j) {
      if (i == j) continue;
      if (Q[j].contains(Q[i]) && !(Q[i].contains(Q[j]) && j > i)) top = false;
    }
    if (top) maximal.push_back(Q[i]);
  }
  std::vector<Ideal> hit, miss;
  for (const auto& q : maximal) (q.contains(datum.u) ? hit : miss).push_back(q);
  if (hit.empty()) return datum;

  std::vector<Ideal> parts = components;
  parts.insert(parts.end(), miss.begin(), miss.end());
  Ideal B = parts.empty() ? Ideal::unit(R.ring) : intersect(parts);
  auto a = element_avoiding(B, hit);
  if (!a) throw Error(ErrorKind::AvoidanceFailure, "no adjustment of u avoids the compatible primes");
  SocleDatum out = datum;
  out.u = R.J.normal_form(datum.u + *a);
  for (const auto& q : Q)
    if (q.contains(out.u)) throw Error(ErrorKind::AvoidanceFailure, "adjusted u still lies in " + q.to_string());
  if (!class_is_zero(apply_additive(out.u, out.alpha, out.context(R)), out.context(R)))
    throw Error(ErrorKind::CertificateFailure, "adjusted u breaks the socle equation");
  return out;
}

SocleDatum globalize(const SocleDatum& datum, const RingPresentation& R, unsigned max_power) {
  const std::uint32_t p = static_cast<std::uint32_t>(R.ring->p());
  const Polynomial X = product_of(datum.params, R.ring);
  const Ideal target = Ideal(R.ring, powers(datum.params, p)) + R.J;
  const Polynomial N = datum.lambda.pow(p) - datum.u * datum.lambda * X.pow(p - 1);
  Polynomial hk = R.one();
  for (unsigned k = 0; k <= max_power; ++k) {
    if (target.contains(hk.pow(p) * N)) {
      SocleDatum out = datum;
      out.lambda = R.J.normal_form(hk * datum.lambda);
      out.u = R.J.normal_form(datum.u * hk.pow(p - 1));
      out.alpha.entries[0].num = out.lambda;
      return out;
    }
    if (datum.h.is_constant()) break;
    hk *= datum.h;
  }
  throw Error(ErrorKind::BoundExceeded, "socle equation does not hold globally");
}

}  // namespace fsk
