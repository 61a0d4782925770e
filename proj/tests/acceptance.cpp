// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "fsk/compatible.hpp"
#include "fsk/primes.hpp"
#include "fsk/trace.hpp"

using namespace fsk;
using namespace fsk::testing;

namespace {

class Checks {
 public:
  void check(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failed_.push_back(what);
  }
  bool ok() const { return failed_.empty(); }
  std::size_t total() const { return total_; }
  const std::vector<std::string>& failed() const { return failed_; }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failed_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Times `body` and fails the criterion when it exceeds `limit` seconds.
template <class F>
double timed(Checks& c, double limit, const std::string& what, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  const double s = seconds_since(t0);
  std::ostringstream msg;
  msg << what << " took " << s << " s (limit " << limit << " s)";
  c.check(s < limit, msg.str());
  return s;
}

std::set<std::vector<std::string>> keys(const std::vector<Ideal>& v) {
  std::set<std::vector<std::string>> out;
  for (const auto& I : v) out.insert(I.canonical_strings());
  return out;
}

std::vector<Ideal> squarefree_monomial_ideals(const RingPresentation& R) {
  const RingPtr& r = R.ring;
  std::vector<Polynomial> monos;
  for (unsigned s = 1; s < 8; ++s) {
    Monomial m(3);
    for (unsigned v = 0; v < 3; ++v)
      if (s & (1u << v)) m.set(v, 1);
    monos.push_back(Polynomial::monomial(r, m));
  }
  std::vector<Ideal> out;
  for (unsigned pick = 1; pick < (1u << 7); ++pick) {
    std::vector<Polynomial> g;
    for (unsigned i = 0; i < 7; ++i)
      if (pick & (1u << i)) g.push_back(monos[i]);
    Ideal I(r, g);
    if (I.contains(R.J)) out.push_back(I.canonical());
  }
  return out;
}

Ideal random_ideal(const RingPtr& r, std::mt19937& rng, int gens, int terms, int deg) {
  std::vector<Polynomial> g;
  for (int i = 0; i < gens; ++i) g.push_back(random_poly(r, rng, terms, deg));
  return Ideal(r, g);
}

ExtensionPresentation random_tower(const RingPresentation& R, std::mt19937& rng) {
  ExtensionPresentation S;
  S.base = R;
  S.adjoined = {"T"};
  S.ring = ExtensionPresentation::extension_ring(R, S.adjoined);
  auto coeff = [&] { return S.embed(random_poly(R.ring, rng, 2, 2)); };
  const Polynomial T = S.variable(0);
  S.monic = {T * T - coeff() * T - coeff()};
  S.relations = {coeff() * T - coeff()};
  S.free_over_base = {false};
  return S;
}

std::vector<Polynomial> standard_monomials_of_degree(const Ideal& J, long deg) {
  std::vector<Polynomial> out;
  if (deg < 0) return out;
  const RingPtr& r = J.ring();
  std::vector<std::uint32_t> ex(r->nvars(), 0);
  auto rec = [&](auto&& self, std::size_t v, std::uint32_t left) -> void {
    if (v + 1 == r->nvars()) {
      ex[v] = left;
      Polynomial f = Polynomial::monomial(r, Monomial(ex));
      if (J.normal_form(f) == f) out.push_back(f);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      ex[v] = k;
      self(self, v + 1, left - k);
    }
  };
  rec(rec, 0, static_cast<std::uint32_t>(deg));
  return out;
}

}  // namespace

namespace {

void fedder_suite(Checks& c) {
  const std::vector<std::pair<std::string, std::pair<RingPresentation, bool>>> cases{
      {"F_2 node", {node(), true}},
      {"F_2 xyz", {snc(), true}},
      {"F_7 cubic", {cubic(), true}},
      {"F_5 quartic", {quartic(), false}}};
  for (const auto& [name, rc] : cases) {
    bool got = false;
    timed(c, 1.0, name, [&] { got = fedder_is_fpure(rc.first, rc.first.irrelevant()); });
    c.check(got == rc.second, name + " F-purity");
  }
}

void enumeration(Checks& c) {
  timed(c, 10.0, "enumeration", [&] {
    auto R = snc();
    auto d = fedder_element(R);
    auto L = enumerate_compatible(d, R);
    const RingPtr& r = R.ring;
    c.check(keys(L.primes) == keys({I(r, "x"), I(r, "y"), I(r, "z"), I(r, "x, y"), I(r, "x, z"), I(r, "y, z"),
                                    I(r, "x, y, z")}),
            "xyz primes are the 7 coordinate primes");
    std::vector<Ideal> brute_primes, brute_ideals;
    for (const auto& J : squarefree_monomial_ideals(R)) {
      if (!is_compatible(J, d, R)) continue;
      brute_ideals.push_back(J);
      if (is_prime(J)) brute_primes.push_back(J);
    }
    c.check(keys(L.primes) == keys(brute_primes), "xyz primes match brute force");
    c.check(keys(L.ideals) == keys(brute_ideals), "xyz ideals match brute force");

    auto N = node();
    auto LN = enumerate_compatible(fedder_element(N), N);
    c.check(keys(LN.primes) == keys({I(N.ring, "x"), I(N.ring, "y"), I(N.ring, "x, y")}), "node primes");
  });
}

void quartic_reproduction(Checks& c) {
  timed(c, 60.0, "quartic", [&] {
    auto R = quartic();
    const RingPtr& r = R.ring;
    auto d = fedder_element(R);
    const Ideal m = R.irrelevant();
    const Ideal m2 = m * m;
    c.check(test_ideal(d, R) == m2 + R.J, "test ideal is m^2");
    c.check(is_fixed(m, d, R), "m is fixed");
    c.check(is_fixed(m2 + R.J, d, R), "m^2 is fixed");
    int count = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        if (i == j) continue;
        for (Coeff a = 0; a < 5; ++a) {
          Polynomial g = Polynomial::variable(r, i) + Polynomial::variable(r, j).scaled(a);
          Ideal K = m2 + R.J + std::vector<Polynomial>{g};
          c.check(is_fixed(K, d, R), "m^2 + (" + g.to_string() + ") is fixed");
          ++count;
        }
      }
    c.check(count == 30, "30 ideals m^2 + (x_i + a x_j)");
  });
}

void node_theorem(Checks& c) {
  timed(c, 10.0, "node build and verify", [&] {
    for (std::uint64_t p : {2, 5}) {
      const std::string tag = "F_" + std::to_string(p) + " node: ";
      auto N = node(p);
      auto b = build_extension(N, N.irrelevant());
      auto rep = verify_main_theorem(N, N.irrelevant(), b.S);
      c.check(rep.equals_input, tag + "trace equals (x, y)");
      for (const char* q : {"x", "y"}) {
        bool certified = false;
        for (const auto& [Q, ok] : rep.etale_certified)
          if (Q == I(N.ring, q)) certified = ok;
        c.check(certified, tag + "etale at (" + q + ")");
      }
      const RingPtr& s = b.S.ring;
      Ideal expected(s, {P(s, "T^2-T"), P(s, "(x+y)*T-x"), P(s, "x*y")});
      c.check(b.S.adjoined == std::vector<std::string>{"T"} && b.S.ideal() == expected,
              tag + "S = R[T]/(T^2-T, (x+y)T-x)");
    }
  });
}

void cubic_domain(Checks& c) {
  timed(c, 600.0, "cubic domain build", [&] {
    auto C = cubic();
    BuildOptions o;
    o.domain = true;
    o.globalize_power = 49;
    auto b = build_extension(C, C.irrelevant(), o);
    c.check(b.injectivity_kernel && *b.injectivity_kernel == C.J, "kernel of R -> S is (0)");
    c.check(b.domain_point.has_value(), "domain certificate");
    c.check(b.witnesses.size() == 1 && !C.J.contains(b.witnesses[0].socle.u), "u is not in (0)");
    auto rep = verify_main_theorem(C, C.irrelevant(), b.S);
    c.check(rep.tau == C.irrelevant(), "trace is m");
    c.check(rep.equals_input, "verification report");
  });
}

void property_suites(Checks& c) {
  std::mt19937 rng(2024);
  int towers = 0;
  for (const auto& R : {node(2), node(5), snc(), cubic()}) {
    const auto d = fedder_element(R);
    for (int i = 0; i < 50; ++i, ++towers) {
      const Ideal tau = trace_ideal(random_tower(R, rng), TraceRoute::Hom);
      c.check(is_compatible(tau, d, R), "trace compatible");
      // Global Fedder criterion on R/tau; F-pure implies reduced, so tau is radical.
      const bool fpure = tau.is_unit() || frobenius_root(quotient(bracket_power(tau, 1), tau), 1).is_unit();
      c.check(fpure, "R/tau F-pure");
      if (!tau.is_unit()) {
        try {
          c.check(intersect(minimal_primes(tau)) == tau, "trace radical");
        } catch (const Error&) {
        }
      }
    }
  }
  c.check(towers >= 50, "tower count");

  int galois = 0;
  for (std::uint64_t p : {2u, 3u}) {
    auto r = ring(p, {"x", "y", "z"});
    for (int t = 0; t < 50; ++t, ++galois) {
      const unsigned e = 1 + t % 2;
      Ideal A = random_ideal(r, rng, 2, 3, 5);
      Ideal K = frobenius_root(A, e) + random_ideal(r, rng, 1, 2, 2);
      if (t % 3 == 0) K = random_ideal(r, rng, 2, 2, 3);
      c.check(K.contains(frobenius_root(A, e)) == bracket_power(K, e).contains(A), "root/bracket adjunction");
    }
  }

  int pairs = 0;
  for (auto R : {node(), snc(), cubic(), node(5)}) {
    auto L = enumerate_compatible(fedder_element(R), R);
    auto all = keys(L.ideals);
    for (const auto& A : L.ideals)
      for (const auto& B : L.ideals) {
        Ideal sum = A + B;
        c.check(sum.is_unit() || all.count(sum.canonical_strings()) == 1, "lattice closed under sum");
        c.check(all.count(intersect(A, B).canonical_strings()) == 1, "lattice closed under intersection");
        ++pairs;
      }
  }
  c.check(pairs >= 50, "lattice pair count");

  int closures = 0;
  for (auto R : {node(), snc(), node(3)}) {
    auto d = fedder_element(R);
    for (int t = 0; t < 20; ++t, ++closures) {
      Ideal A(R.ring, {random_poly(R.ring, rng, 3, 2)});
      Ideal cA = compatible_closure(A, d, R);
      c.check(compatible_closure(cA, d, R) == cA, "closure idempotent");
    }
  }
  c.check(closures >= 50, "closure count");

  auto r5 = ring(5, {"x", "y", "z"});
  CechContext free5(RingPresentation(r5, Ideal(r5)), {P(r5, "x"), P(r5, "y"), P(r5, "z")});
  auto S2 = snc();
  CechContext snc_ctx(S2, {P(S2.ring, "x+y"), P(S2.ring, "y+z"), P(S2.ring, "x+z")});
  std::uniform_int_distribution<std::uint32_t> ex(0, 3);
  int dd = 0;
  for (const CechContext* ctx : {&free5, &snc_ctx})
    for (unsigned level = 0; level < 2; ++level)
      for (int i = 0; i < 25; ++i, ++dd) {
        CechCochain x = zero_cochain(*ctx, level);
        auto subsets = cech_subsets(ctx->d(), level);
        for (std::size_t t = 0; t < subsets.size(); ++t) {
          x.entries[t].num = random_poly(ctx->R.ring, rng, 3, 3);
          for (auto v : subsets[t]) x.entries[t].exps[v] = ex(rng);
        }
        c.check(cochain_is_zero(cech_differential(cech_differential(x, *ctx), *ctx), *ctx), "d o d = 0");
      }
  c.check(dd >= 50, "d o d count");

  auto N = node();
  auto C = cubic();
  const std::vector<std::tuple<CechContext, std::uint32_t, long>> strands{
      {CechContext(N, {P(N.ring, "x+y")}), 2, 1}, {CechContext(C, {P(C.ring, "y"), P(C.ring, "z")}), 7, 2}};
  for (const auto& [ctx, s, D] : strands)
    for (long k = -3; k <= 3; ++k) {
      auto nums = standard_monomials_of_degree(ctx.R.J, k + static_cast<long>(s) * D);
      const std::size_t n = nums.size();
      for (std::size_t i = 1; i < n; ++i) nums.push_back(nums[i - 1] + nums[i]);
      for (const auto& a : nums) {
        CechCochain x = top_cochain(ctx, a, s);
        c.check(class_is_zero(x, ctx) == strand_class_is_zero(x, ctx),
                "class test agrees with strand rank in degree " + std::to_string(k));
      }
    }
}

void socle_oracle(Checks& c) {
  for (std::uint64_t p : {2, 5}) {
    const std::string tag = "F_" + std::to_string(p) + " node: ";
    auto N = node(p);
    SocleDatum s = socle_datum(N, N.irrelevant(), {P(N.ring, "x+y")});
    CechContext ctx = s.context(N);
    bool scaled = false;
    for (Coeff a = 1; a < static_cast<Coeff>(p); ++a)
      scaled = scaled || class_is_zero(cochain_sub(s.alpha, top_cochain(ctx, P(N.ring, "x").scaled(a), 1), ctx), ctx);
    c.check(scaled, tag + "alpha = x/(x+y) up to a unit");
    c.check(s.u == P(N.ring, "1"), tag + "u = 1");
  }
  auto C = cubic();
  SocleDatum sc = socle_datum(C, C.irrelevant(), {P(C.ring, "y"), P(C.ring, "z")});
  c.check(sc.u.is_unit(), "cubic u is a nonzero scalar");

  auto N = node();
  CechContext nctx(N, {P(N.ring, "x+y")});
  const std::vector<std::pair<long, std::size_t>> dims{{0, 1}, {1, 0}, {-1, 1}};
  for (const auto& [deg, want] : dims) {
    const std::size_t got = strand_cohomology(nctx, deg).dimension();
    c.check(got == want, "node strand degree " + std::to_string(deg) + " has dimension " + std::to_string(got) +
                             ", expected " + std::to_string(want));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checks&)>>> criteria{
      {"Fedder suite", fedder_suite},
      {"Enumeration", enumeration},
      {"Quartic test ideal and fixed ideals", quartic_reproduction},
      {"Main theorem, node", node_theorem},
      {"Main theorem, domain case", cubic_domain},
      {"Property suites", property_suites},
      {"Socle oracle", socle_oracle}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checks c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t0);
    std::ostringstream line;
    line << "criterion " << i + 1 << " " << (c.ok() ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
         << c.total() - c.failed().size() << "/" << c.total() << " checks, " << s << " s)";
    for (const auto& f : c.failed()) line << "  [" << f << "]";
    std::cout << line.str() << std::endl;
    failures += c.ok() ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
