#include "fsk/frobenius.hpp"

#include <map>

#include "fsk/error.hpp"

namespace fsk {

std::optional<Polynomial> RingPresentation::principal_generator() const {
  const auto& b = J.basis();
  if (b.size() == 1) return b[0];
  return std::nullopt;
}

Ideal RingPresentation::irrelevant() const {
  std::vector<Polynomial> vars;
  for (std::size_t v = 0; v < ring->nvars(); ++v) vars.push_back(Polynomial::variable(ring, v));
  return Ideal(ring, vars);
}

Ideal bracket_power(const Ideal& I, unsigned e) {
  if (e == 0) return I;
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(g.frobenius_power(e));
  return Ideal(I.ring(), gens);
}

Ideal frobenius_root(const Ideal& I, unsigned e) {
  if (e == 0) return I;
  const RingPtr& r = I.ring();
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= r->p();
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) {
    // Coefficients in F_p are their own p-th roots.
    std::map<std::vector<std::uint32_t>, std::vector<Term>> pieces;
    for (const auto& t : g.terms()) {
      std::vector<std::uint32_t> rem(r->nvars());
      Monomial quot(r->nvars());
      for (std::size_t v = 0; v < r->nvars(); ++v) {
        rem[v] = static_cast<std::uint32_t>(t.mono[v] % q);
        quot.set(v, static_cast<std::uint32_t>(t.mono[v] / q));
      }
      pieces[rem].push_back({quot, t.coeff});
    }
    for (auto& [rem, ts] : pieces) gens.emplace_back(r, std::move(ts));
  }
  return Ideal(r, gens);
}

bool fedder_is_fpure(const RingPresentation& R, const Ideal& at) {
  Ideal atp = bracket_power(at, 1);
  if (auto f = R.principal_generator()) return !atp.contains(f->pow(R.ring->p() - 1));
  if (R.J.is_zero()) return !atp.is_unit();
  return !atp.contains(quotient(bracket_power(R.J, 1), R.J));
}

FrobeniusDatum fedder_element(const RingPresentation& R) {
  if (R.J.is_zero()) return {1, R.one()};
  auto f = R.principal_generator();
  if (!f) throw Error(ErrorKind::Unsupported, "Fedder generator needs a principal defining ideal");
  return {1, f->pow(R.ring->p() - 1)};
}

Polynomial iterated_multiplier(const FrobeniusDatum& d, unsigned e) {
  const std::uint64_t p = d.u.ring()->p();
  std::uint64_t exp = 0, q = 1;
  for (unsigned i = 0; i < e; ++i, q *= p) exp += q;
  return d.u.pow(exp);
}

}  // namespace fsk
