#include "doctest.h"
#include "fsk/error.hpp"
#include "fsk/primes.hpp"
#include "support.hpp"

using namespace fsk;
using namespace fsk::testing;

namespace {

UPoly random_upoly(const PrimeField& F, std::mt19937& rng, int deg) {
  std::uniform_int_distribution<Coeff> c(0, F.characteristic() - 1);
  UPoly u(deg + 1);
  for (auto& x : u) x = c(rng);
  u.back() = 1;
  return u;
}

// Irreducibility by trial division over all monic polynomials of degree <= deg/2.
bool brute_irreducible(const PrimeField& F, const UPoly& u) {
  const long d = upoly::degree(u);
  const Coeff p = F.characteristic();
  for (long k = 1; 2 * k <= d; ++k) {
    UPoly q(k + 1, 0);
    q[k] = 1;
    for (;;) {
      if (upoly::mod(F, u, q).empty()) return false;
      long i = 0;
      while (i < k && ++q[i] == p) q[i++] = 0;
      if (i == k) break;
    }
  }
  return true;
}

void check_sound(const Ideal& I, const std::vector<Ideal>& primes) {
  REQUIRE_FALSE(primes.empty());
  for (const auto& P : primes) {
    CHECK(P.contains(I));
    CHECK(is_prime(P));
  }
  Ideal all = intersect(primes);
  CHECK(all.contains(I));
  for (const auto& g : all.basis()) CHECK(radical_membership(g, I));
}

}  // namespace

TEST_CASE("univariate factorization reproduces the input") {
  std::mt19937 rng(3);
  for (Coeff p : {2u, 3u, 5u, 7u}) {
    PrimeField F(p);
    for (int trial = 0; trial < 15; ++trial) {
      UPoly u = random_upoly(F, rng, 1 + trial % 7);
      UPoly prod{1};
      for (auto& [q, m] : upoly::factor(F, u)) {
        CHECK(brute_irreducible(F, q));
        for (unsigned i = 0; i < m; ++i) prod = upoly::mul(F, prod, q);
      }
      CHECK(prod == u);
    }
  }
}

TEST_CASE("univariate factorization examples") {
  PrimeField F5(5), F3(3), F7(7);
  CHECK(upoly::factor(F5, {4, 0, 0, 0, 1}).size() == 4);
  CHECK(upoly::is_irreducible(F3, {1, 0, 1}));
  // x^7 + x = x (x^6 + 1), and x^6 + 1 splits into three quadratics over F_7.
  auto f = upoly::factor(F7, {0, 1, 0, 0, 0, 0, 0, 1});
  REQUIRE(f.size() == 4);
  CHECK(upoly::degree(f[0].first) == 1);
  for (int i = 1; i < 4; ++i) CHECK(upoly::degree(f[i].first) == 2);
  // Repeated factors in characteristic p.
  auto g = upoly::factor(F3, {2, 0, 0, 1});  // x^3 - 1 = (x - 1)^3
  REQUIRE(g.size() == 1);
  CHECK(g[0].second == 3);
  CHECK(upoly::roots(F5, {4, 0, 0, 0, 1}) == std::vector<Coeff>{1, 2, 3, 4});
}

TEST_CASE("minimal primes of monomial ideals") {
  auto r2 = ring(2, {"x", "y"});
  auto mp = minimal_primes(I(r2, "x*y"));
  REQUIRE(mp.size() == 2);
  CHECK(mp[0] == I(r2, "x"));
  CHECK(mp[1] == I(r2, "y"));
  auto r3 = ring(2, {"x", "y", "z"});
  auto m3 = minimal_primes(I(r3, "x*y*z"));
  CHECK(m3.size() == 3);
  check_sound(I(r3, "x*y*z"), m3);
  auto mixed = minimal_primes(I(r3, "x*y, x*z"));
  REQUIRE(mixed.size() == 2);
  check_sound(I(r3, "x*y, x*z"), mixed);
}

TEST_CASE("irreducible cubic") {
  auto r = ring(7, {"x", "y", "z"});
  Polynomial f = P(r, "x^3+y^3+z^3");
  auto mp = minimal_primes(Ideal(r, {f}));
  REQUIRE(mp.size() == 1);
  CHECK(mp[0] == Ideal(r, {f}));
  // Oracle: a reducible cubic form has a linear factor; none of the 57
  // normalized linear forms divides f.
  int divisors = 0;
  for (Coeff a = 0; a < 7; ++a)
    for (Coeff b = 0; b < 7; ++b)
      for (Coeff c = 0; c < 7; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        Polynomial l = P(r, std::to_string(a) + "*x+" + std::to_string(b) + "*y+" + std::to_string(c) + "*z");
        if (divide_exact(f, l)) ++divisors;
      }
  CHECK(divisors == 0);
}

TEST_CASE("forms that factor") {
  auto r = ring(5, {"x", "y", "z"});
  auto fs = irreducible_factors(P(r, "(x+y+z)*(x^2+2*y*z+3*z^2)"));
  CHECK(fs.size() == 2);
  auto bin = irreducible_factors(P(r, "x^2-y^2"));
  CHECK(bin.size() == 2);
  auto r2 = ring(5, {"x", "y"});
  CHECK_THROWS_AS(minimal_primes(I(r2, "y^2-x^3-x^2")), Error);
}

TEST_CASE("zero-dimensional decomposition") {
  auto r = ring(3, {"x", "y"});
  Ideal i = I(r, "x^2+1, y^2+1");
  auto mp = minimal_primes(i);
  CHECK(mp.size() == 2);
  check_sound(i, mp);
  auto r5 = ring(5, {"x", "y"});
  auto pt = minimal_primes(I(r5, "x^2, y"));
  REQUIRE(pt.size() == 1);
  CHECK(pt[0] == I(r5, "x, y"));
  Ideal j = I(r5, "x^3-y^3, x*y, x^4");
  auto mj = minimal_primes(j);
  REQUIRE(mj.size() == 1);
  CHECK(mj[0] == I(r5, "x, y"));
}

TEST_CASE("linear parts are split off") {
  auto r = ring(5, {"x", "y", "z"});
  Ideal i = I(r, "x^2-y^2, z");
  auto mp = minimal_primes(i);
  CHECK(mp.size() == 2);
  check_sound(i, mp);
}

TEST_CASE("hints") {
  auto r = ring(2, {"x", "y"});
  auto ok = minimal_primes(I(r, "x*y"), {I(r, "x"), I(r, "y")});
  CHECK(ok.size() == 2);
  CHECK_THROWS_AS(minimal_primes(I(r, "x*y"), {I(r, "x")}), Error);
  CHECK_THROWS_AS(minimal_primes(I(r, "x*y"), {I(r, "x"), I(r, "y^2")}), Error);
  CHECK_THROWS_AS(minimal_primes(I(r, "x*y"), {I(r, "x"), I(r, "x, y")}), Error);
}
