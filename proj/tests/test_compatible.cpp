#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "fsk/compatible.hpp"
#include "fsk/error.hpp"
#include "fsk/primes.hpp"

using namespace fsk;
using namespace fsk::testing;

namespace {

std::set<std::vector<std::string>> keys(const std::vector<Ideal>& v) {
  std::set<std::vector<std::string>> out;
  for (const auto& I : v) out.insert(I.canonical_strings());
  return out;
}

// Squarefree monomial ideals of F[x,y,z] containing J, from antichains of
// variable subsets.
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

}  // namespace

TEST_CASE("compatibility examples") {
  auto R = node();
  auto d = fedder_element(R);
  CHECK(is_compatible(I(R.ring, "x"), d, R));
  CHECK_FALSE(is_compatible(I(R.ring, "x+y, x*y"), d, R));
  CHECK(is_compatible(Ideal::unit(R.ring), d, R));
}

TEST_CASE("fixed ideals of the quartic") {
  auto R = quartic();
  auto d = fedder_element(R);
  Ideal m = R.irrelevant();
  CHECK(is_fixed(m, d, R));
  CHECK(is_fixed(m * m, d, R));
  CHECK(is_fixed(m * m + I(R.ring, "x+2*y"), d, R));
}

TEST_CASE("compatible closure") {
  auto R = node();
  auto d = fedder_element(R);
  CHECK(compatible_closure(I(R.ring, "x"), d, R) == I(R.ring, "x"));
  CHECK(compatible_closure(I(R.ring, "x+y"), d, R) == I(R.ring, "x, y"));
  CHECK(compatible_closure(Ideal::unit(R.ring), d, R).is_unit());
}

TEST_CASE("test ideals") {
  auto C = cubic();
  CHECK(test_ideal(fedder_element(C), C) == C.irrelevant());
  auto Q = quartic();
  Ideal m = Q.irrelevant();
  CHECK(test_ideal(fedder_element(Q), Q) == m * m);
  auto N = node();
  CHECK(test_ideal(fedder_element(N), N) == I(N.ring, "x, y"));
}

TEST_CASE("test ideal does not depend on the test element") {
  auto C = cubic();
  auto dc = fedder_element(C);
  CHECK(test_ideal(dc, C, P(C.ring, "x^2")) == test_ideal(dc, C, P(C.ring, "y^2")));
  auto Q = quartic();
  auto dq = fedder_element(Q);
  CHECK(test_ideal(dq, Q, P(Q.ring, "x^3")) == test_ideal(dq, Q, P(Q.ring, "y^3")));
  auto N = node(5);
  auto dn = fedder_element(N);
  CHECK(test_ideal(dn, N, P(N.ring, "x+y")) == test_ideal(dn, N, P(N.ring, "x+2*y")));
  CHECK_THROWS_AS(test_ideal(dn, N, P(N.ring, "x")), Error);
}

TEST_CASE("splitting primes") {
  for (auto R : {node(), cubic(), snc()}) {
    auto d = fedder_element(R);
    CHECK(splitting_prime(d, R, R.irrelevant()) == R.irrelevant());
  }
}

TEST_CASE("enumeration of the SNC lattice against brute force") {
  auto R = snc();
  auto d = fedder_element(R);
  auto L = enumerate_compatible(d, R);
  CHECK(L.primes.size() == 7);
  std::vector<Ideal> brute_primes, brute_ideals;
  for (const auto& I : squarefree_monomial_ideals(R)) {
    if (!is_compatible(I, d, R)) continue;
    brute_ideals.push_back(I);
    if (is_prime(I)) brute_primes.push_back(I);
  }
  CHECK(keys(L.primes) == keys(brute_primes));
  CHECK(keys(L.ideals) == keys(brute_ideals));
}

TEST_CASE("enumeration of the node and the cubic") {
  auto N = node();
  auto L = enumerate_compatible(fedder_element(N), N);
  CHECK(keys(L.primes) == keys({I(N.ring, "x"), I(N.ring, "y"), I(N.ring, "x, y")}));
  auto C = cubic();
  auto LC = enumerate_compatible(fedder_element(C), C);
  CHECK(keys(LC.primes) == keys({C.J, C.irrelevant()}));
  CHECK_THROWS_AS(enumerate_compatible(fedder_element(quartic()), quartic()), Error);
}

TEST_CASE("lattice laws") {
  for (auto R : {node(), snc(), cubic(), node(5)}) {
    auto d = fedder_element(R);
    auto L = enumerate_compatible(d, R);
    auto all = keys(L.ideals);
    std::mt19937 rng(1);
    for (std::size_t a = 0; a < L.ideals.size(); ++a) {
      const Ideal& A = L.ideals[a];
      CHECK(is_compatible(A, d, R));
      CHECK(is_fixed(A, d, R));
      for (int s = 0; s < 5; ++s) {
        Polynomial f = random_poly(R.ring, rng, 3, 3);
        if (radical_membership(f, A)) CHECK(A.contains(f));
      }
      for (std::size_t b = 0; b < L.ideals.size(); ++b) {
        Ideal sum = A + L.ideals[b];
        if (!sum.is_unit()) CHECK(all.count(sum.canonical_strings()) == 1);
        CHECK(all.count(intersect(A, L.ideals[b]).canonical_strings()) == 1);
      }
    }
    for (const auto& [a, b] : L.edges) CHECK(L.ideals[b].contains(L.ideals[a]));
  }
}

TEST_CASE("closure is monotone and idempotent") {
  std::mt19937 rng(50);
  int runs = 0;
  for (auto R : {node(), snc(), node(3)}) {
    auto d = fedder_element(R);
    for (int seed = 0; seed < 20; ++seed) {
      Ideal A(R.ring, {random_poly(R.ring, rng, 3, 2)});
      Ideal B = A + std::vector<Polynomial>{random_poly(R.ring, rng, 2, 2)};
      Ideal cA = compatible_closure(A, d, R), cB = compatible_closure(B, d, R);
      CHECK(cB.contains(cA));
      CHECK(compatible_closure(cA, d, R) == cA);
      ++runs;
    }
  }
  CHECK(runs >= 50);
}
