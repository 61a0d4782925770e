#pragma once

#include <random>
#include <string>
#include <vector>

#include "fsk/ideal.hpp"
#include "fsk/parse.hpp"

namespace fsk::testing {

inline RingPtr ring(std::uint64_t p, std::vector<std::string> vars,
                    MonomialOrder order = MonomialOrder::grevlex()) {
  return Ring::make(p, std::move(vars), order);
}

inline Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

inline Ideal I(const RingPtr& r, const std::string& gens) {
  return Ideal(r, parse_polynomial_list(gens, r));
}

/// Random polynomial with up to `terms` terms of degree <= `deg`.
inline Polynomial random_poly(const RingPtr& r, std::mt19937& rng, int terms, int deg) {
  std::uniform_int_distribution<int> nt(0, terms);
  std::uniform_int_distribution<std::uint32_t> e(0, static_cast<std::uint32_t>(deg));
  std::uniform_int_distribution<std::uint32_t> c(1, r->p() - 1 == 0 ? 1 : r->p() - 1);
  std::vector<Term> ts;
  int n = nt(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m(r->nvars());
    std::uint32_t left = static_cast<std::uint32_t>(deg);
    for (std::size_t v = 0; v < r->nvars(); ++v) {
      std::uint32_t x = std::min(left, e(rng));
      m.set(v, x);
      left -= x;
    }
    ts.push_back({m, r->p() == 2 ? 1u : c(rng)});
  }
  return Polynomial(r, std::move(ts));
}

inline Monomial random_monomial(std::size_t n, std::mt19937& rng, std::uint32_t maxe) {
  std::uniform_int_distribution<std::uint32_t> e(0, maxe);
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, e(rng));
  return m;
}

}  // namespace fsk::testing
