#include "doctest.h"
#include "fixtures.hpp"
#include "fsk/compatible.hpp"
#include "fsk/error.hpp"
#include "fsk/primes.hpp"
#include "fsk/trace.hpp"

using namespace fsk;
using namespace fsk::testing;

namespace {

ExtensionPresentation one_variable(const RingPresentation& R, const std::string& monic,
                                   const std::vector<std::string>& relations = {}) {
  ExtensionPresentation S;
  S.base = R;
  S.adjoined = {"T"};
  S.ring = ExtensionPresentation::extension_ring(R, S.adjoined);
  S.monic = {P(S.ring, monic)};
  for (const auto& r : relations) S.relations.push_back(P(S.ring, r));
  S.free_over_base = {relations.empty()};
  return S;
}

// R[T]/(T^2 - aT - b, cT - d) for random a, b, c, d.
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

// Global Fedder criterion: R/K is F-pure iff the Frobenius root of K^[p] : K is the unit ideal.
bool quotient_is_fpure(const Ideal& K) {
  if (K.is_unit()) return true;
  return frobenius_root(quotient(bracket_power(K, 1), K), 1).is_unit();
}

}  // namespace

TEST_CASE("module presentation") {
  auto N = node(5);
  auto free = one_variable(N, "T^2-T");
  ModulePresentation M = module_presentation(free);
  CHECK(M.basis.size() == 2);
  CHECK(M.relations.size() == 2);
  CHECK(M.relations[0].empty());

  auto S = one_variable(N, "T^2-T", {"(x+y)*T-x"});
  ModulePresentation MS = module_presentation(S);
  REQUIRE(MS.relations.size() == 2);
  REQUIRE_FALSE(MS.relations[0].empty());
  // First column is (x+y)T - x itself.
  CHECK(MS.relations[MS.index_of_one][0] == P(N.ring, "-x"));
  CHECK(MS.relations[1 - MS.index_of_one][0] == P(N.ring, "x+y"));

  ModulePresentation MR = module_presentation(ExtensionPresentation::identity(N));
  CHECK(MR.basis.size() == 1);
}

TEST_CASE("hom presentations") {
  auto N = node(5);
  const RingPtr& n = N.ring;
  HomPresentation id = hom_presentation(module_presentation(ExtensionPresentation::identity(N)), N);
  REQUIRE(id.generators.size() == 1);
  CHECK(id.generators[0][0] == P(n, "1"));

  HomPresentation two = hom_presentation(module_presentation(one_variable(N, "T^2")), N);
  CHECK(two.generators.size() == 2);

  // Every map on the node normalization sends (1, T) to a multiple of (x, x) plus one of (y, 0),
  // and both of those are maps.
  auto S = one_variable(N, "T^2-T", {"(x+y)*T-x"});
  ModulePresentation M = module_presentation(S);
  HomPresentation H = hom_presentation(M, N);
  const std::size_t one = M.index_of_one, t = 1 - one;
  for (const auto& phi : H.generators) {
    // φ((x+y)T - x) = 0 and φ(T^2 - T) = 0 hold by construction; check the first by hand.
    CHECK(N.J.contains(P(n, "x+y") * phi[t] - P(n, "x") * phi[one]));
  }
  std::vector<Polynomial> ev;
  for (const auto& phi : H.generators) ev.push_back(phi[one]);
  CHECK(Ideal(n, ev) + N.J == I(n, "x, y, x*y"));
}

TEST_CASE("trace ideals of simple extensions") {
  auto N = node(5);
  const RingPtr& n = N.ring;
  CHECK(trace_ideal(one_variable(N, "T^2-x")).is_unit());
  CHECK(trace_ideal(ExtensionPresentation::identity(N)).is_unit());
  // Adding the saturation relation drops the trace to the conductor.
  auto S = one_variable(N, "T^2-T", {"(x+y)*T-x"});
  Ideal tau = trace_ideal(S);
  CHECK(tau == I(n, "x, y"));
  CHECK(is_split_at(S, I(n, "x")));
  CHECK(is_split_at(S, I(n, "y")));
  CHECK_FALSE(is_split_at(S, I(n, "x, y")));
  CHECK(is_split_at(ExtensionPresentation::identity(N), I(n, "x, y")));
}

TEST_CASE("hom and conductor routes agree") {
  for (std::uint64_t p : {2, 5}) {
    auto N = node(p);
    auto b = build_extension(N, N.irrelevant());
    CHECK(trace_ideal(b.S, TraceRoute::Hom) == trace_ideal(b.S, TraceRoute::Conductor));
  }
  auto R = snc();
  const RingPtr& s = R.ring;
  for (const char* gens : {"x, y", "x*y", "x, y*z"}) {
    auto b = build_extension(R, I(s, gens));
    if (b.S.birational.empty()) continue;
    CHECK(trace_ideal(b.S, TraceRoute::Hom) == trace_ideal(b.S, TraceRoute::Conductor));
  }
  CHECK_THROWS(trace_ideal(one_variable(node(5), "T^2-x"), TraceRoute::Conductor));
}

TEST_CASE("trace ideals of random towers are compatible and F-pure") {
  std::mt19937 rng(7);
  for (const auto& R : {node(2), node(5), snc(), cubic()}) {
    const FrobeniusDatum fd = fedder_element(R);
    int radical_checked = 0;
    for (int i = 0; i < 50; ++i) {
      ExtensionPresentation S = random_tower(R, rng);
      const Ideal tau = trace_ideal(S, TraceRoute::Hom);
      CHECK(tau.contains(R.J));
      CHECK(is_compatible(tau, fd, R));
      CHECK(quotient_is_fpure(tau));
      if (tau.is_unit()) continue;
      try {
        CHECK(intersect(minimal_primes(tau)) == tau);
        ++radical_checked;
      } catch (const Error&) {
      }
    }
    CHECK(radical_checked >= 25);
  }
}

TEST_CASE("verification reports") {
  SUBCASE("node") {
    for (std::uint64_t p : {2, 5}) {
      auto N = node(p);
      auto b = build_extension(N, N.irrelevant());
      VerificationReport rep = verify_main_theorem(N, N.irrelevant(), b.S);
      CHECK(rep.equals_input);
      CHECK(rep.compatible);
      CHECK(rep.radical_check);
      REQUIRE(rep.etale_certified.size() == 2);
      for (const auto& [q, ok] : rep.etale_certified) CHECK(ok);
      // A certificate forces splitting.
      for (std::size_t i = 0; i < rep.split_at.size(); ++i)
        if (rep.etale_certified[i].second) CHECK(rep.split_at[i].second);
      REQUIRE(rep.class_death.size() == 1);
      CHECK(rep.class_death[0].second);
    }
  }
  SUBCASE("snc") {
    auto R = snc();
    const RingPtr& s = R.ring;
    for (const char* gens : {"x", "x, y", "x*y", "x, y*z", "x, y, z"}) {
      auto b = build_extension(R, I(s, gens));
      VerificationReport rep = verify_main_theorem(R, I(s, gens), b.S);
      CHECK_MESSAGE(rep.equals_input, gens);
      for (std::size_t i = 0; i < rep.split_at.size(); ++i) {
        CHECK(rep.etale_certified[i].second);
        CHECK(rep.split_at[i].second);
      }
      for (const auto& [P, dies] : rep.class_death) CHECK(dies);
    }
  }
  SUBCASE("identity") {
    auto N = node();
    VerificationReport rep =
        verify_main_theorem(N, Ideal::unit(N.ring), ExtensionPresentation::identity(N));
    CHECK(rep.equals_input);
    CHECK(rep.tau.is_unit());
  }
}

TEST_CASE("cubic verification") {
  auto C = cubic();
  auto b = build_extension(C, C.irrelevant());
  VerificationReport rep = verify_main_theorem(C, C.irrelevant(), b.S);
  CHECK(rep.equals_input);
  CHECK(rep.tau == C.irrelevant());
  // The only compatible prime not containing the maximal ideal is (0) = J.
  REQUIRE(rep.etale_certified.size() == 1);
  CHECK(rep.etale_certified[0].first == C.J);
  CHECK(rep.etale_certified[0].second);
  CHECK(rep.split_at[0].second);
}
