#include "doctest.h"
#include "fsk/error.hpp"
#include "support.hpp"

using namespace fsk;
using namespace fsk::testing;

namespace {

std::vector<std::string> strs(const std::vector<Polynomial>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto r2 = ring(2, {"x", "y"});
  CHECK(strs(I(r2, "x+y, y").basis()) == std::vector<std::string>{"x", "y"});
  auto r5 = ring(5, {"x", "y"});
  CHECK(strs(I(r5, "x*y, x^2").basis()) == std::vector<std::string>{"x^2", "x*y"});
  CHECK(strs(I(r5, "1").basis()) == std::vector<std::string>{"1"});
  CHECK(Ideal(r5).basis().empty());
}

TEST_CASE("buchberger fixpoint and S-pair closure") {
  std::mt19937 rng(2024);
  for (std::uint64_t p : {2u, 3u, 7u}) {
    auto r = ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Polynomial> g;
      for (int i = 0; i < 3; ++i) g.push_back(random_poly(r, rng, 3, 3));
      auto gb = buchberger(g, r);
      CHECK(is_groebner_basis(gb));
      CHECK(buchberger(gb, r) == gb);
      for (const auto& f : g) CHECK(reduce(f, gb).is_zero());
    }
  }
}

TEST_CASE("normal form") {
  auto r5 = ring(5, {"x"});
  CHECK(I(r5, "x").normal_form(P(r5, "x^2")).is_zero());
  CHECK(I(r5, "x").normal_form(P(r5, "x+1")) == P(r5, "1"));
  auto lex = ring(5, {"y", "x"}, MonomialOrder::lex());
  CHECK(I(lex, "y^2-x").normal_form(P(lex, "y^2")) == P(lex, "x"));
}

TEST_CASE("sum and product") {
  auto r = ring(3, {"x", "y"});
  CHECK(I(r, "x") + I(r, "y") == I(r, "x, y"));
  CHECK(I(r, "x") * I(r, "y") == I(r, "x*y"));
  CHECK(I(r, "x^2, y") + Ideal(r) == I(r, "x^2, y"));
  CHECK(ideal_combine(CombineOp::Product, I(r, "x, y"), I(r, "x")) == I(r, "x^2, x*y"));
}

TEST_CASE("intersection") {
  auto r = ring(2, {"x", "y"});
  Ideal m = intersect(I(r, "x"), I(r, "y"));
  // Oracle: membership both ways.
  CHECK(m.contains(P(r, "x*y")));
  CHECK(I(r, "x*y").contains(m));
  CHECK(intersect(I(r, "x^2, y"), I(r, "x^2, y")) == I(r, "x^2, y"));
  CHECK(intersect(I(r, "x"), I(r, "1")) == I(r, "x"));
}

TEST_CASE("colon quotient") {
  auto r = ring(5, {"x", "y"});
  CHECK(quotient(I(r, "x^2"), I(r, "x")) == I(r, "x"));
  CHECK(quotient(I(r, "x*y"), I(r, "x")) == I(r, "y"));
  CHECK(quotient(I(r, "x^5"), I(r, "x^2")) == I(r, "x^3"));
}

TEST_CASE("saturation") {
  auto r = ring(5, {"x", "y"});
  CHECK(saturate(I(r, "x^2*y"), P(r, "y")) == I(r, "x^2"));
  CHECK(saturate(I(r, "x"), P(r, "x")).is_unit());
  auto rt = ring(2, {"x", "y", "T"});
  Ideal s = saturate(I(rt, "(x+y)*T - x, x*y"), P(rt, "x+y"));
  CHECK(s.contains(P(rt, "T^2-T")));
  // Oracle: (x+y)^2 (T^2-T) lies in the unsaturated ideal.
  CHECK(I(rt, "(x+y)*T - x, x*y").contains(P(rt, "(x+y)^2*(T^2-T)")));
  CHECK(saturate(s, P(rt, "x+y")) == s);
}

TEST_CASE("elimination") {
  auto r = ring(3, {"x", "y"});
  CHECK(eliminate(I(r, "y-x^2, x"), {0}) == I(r, "y"));
  CHECK(eliminate(I(r, "x"), {0}).is_zero());
  CHECK(eliminate(I(r, "1"), {0, 1}).is_unit());
}

TEST_CASE("dimension") {
  auto r2 = ring(2, {"x", "y"});
  CHECK(dimension(I(r2, "x*y")) == 1);
  CHECK(dimension(I(r2, "x, y")) == 0);
  auto r3 = ring(2, {"x", "y", "z"});
  CHECK(dimension(Ideal(r3)) == 3);
  CHECK_THROWS_AS(dimension(I(r3, "1")), Error);
}

TEST_CASE("syzygy kernel") {
  auto r = ring(5, {"x", "y"});
  auto k = syzygy_kernel({{P(r, "x"), P(r, "y")}}, r);
  REQUIRE(k.size() == 1);
  // Generated by (y, -x) up to scalar.
  CHECK(k[0][0] * P(r, "x") + k[0][1] * P(r, "y") == Polynomial(r));
  CHECK((k[0][0] == P(r, "y") || k[0][0] == P(r, "-y")));
  CHECK(syzygy_kernel({{P(r, "1")}}, r).empty());
  CHECK(syzygy_kernel({{P(r, "x^2")}, {P(r, "x*y")}}, r).empty());
}

TEST_CASE("syzygy soundness on random matrices") {
  std::mt19937 rng(5);
  auto r = ring(3, {"x", "y", "z"});
  for (int trial = 0; trial < 20; ++trial) {
    PolyMatrix m(2, std::vector<Polynomial>(3, Polynomial(r)));
    for (auto& row : m)
      for (auto& e : row) e = random_poly(r, rng, 2, 2);
    for (const auto& v : syzygy_kernel(m, r)) {
      for (const auto& row : m) {
        Polynomial s(r);
        for (std::size_t j = 0; j < 3; ++j) s += row[j] * v[j];
        CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("lift returns cofactors") {
  auto r = ring(7, {"x", "y", "z"});
  std::vector<Polynomial> g = {P(r, "x^2-y"), P(r, "x*y-z")};
  Polynomial f = P(r, "x^3*y - x*y^2 + 3*x*y - 3*z");
  auto c = lift(f, g);
  REQUIRE(c);
  CHECK((*c)[0] * g[0] + (*c)[1] * g[1] == f);
  CHECK_FALSE(lift(P(r, "x"), g));
}

TEST_CASE("radical membership") {
  auto r = ring(5, {"x", "y"});
  CHECK(radical_membership(P(r, "x"), I(r, "x^2")));
  CHECK_FALSE(radical_membership(P(r, "y"), I(r, "x^2")));
  CHECK(radical_membership(P(r, "x+y"), I(r, "(x+y)^3")));
}

TEST_CASE("membership consistency in radical monomial ideals") {
  std::mt19937 rng(11);
  auto r = ring(3, {"x", "y", "z"});
  std::vector<Ideal> ideals = {I(r, "x*y"), I(r, "x, y*z"), I(r, "x*y*z"), I(r, "x*y, y*z, x*z")};
  for (int trial = 0; trial < 100; ++trial) {
    const Ideal& J = ideals[trial % ideals.size()];
    Polynomial f = random_poly(r, rng, 3, 3);
    CHECK(J.contains(f) == radical_membership(f, J));
  }
}

TEST_CASE("colon adjunction and saturation idempotence") {
  std::mt19937 rng(77);
  auto r = ring(5, {"x", "y", "z"});
  for (int trial = 0; trial < 15; ++trial) {
    Ideal a(r, {random_poly(r, rng, 3, 3), random_poly(r, rng, 3, 3)});
    Ideal b(r, {random_poly(r, rng, 2, 2)});
    if (b.is_zero()) continue;
    CHECK(a.contains(b * quotient(a, b)));
    Polynomial f = b.gens()[0];
    Ideal s = saturate(a, f);
    CHECK(saturate(s, f) == s);
  }
}
