#pragma once

#include <optional>

#include "fsk/ideal.hpp"

namespace fsk {

/// Ambient polynomial ring plus defining ideal J; R = ring / J.
struct RingPresentation {
  RingPtr ring;
  Ideal J;

  RingPresentation() = default;
  RingPresentation(RingPtr r, Ideal j) : ring(std::move(r)), J(std::move(j)) {}
  static RingPresentation hypersurface(const Polynomial& f) {
    return {f.ring(), Ideal(f.ring(), {f})};
  }

  /// The generator f when J = (f) is principal and nonzero.
  std::optional<Polynomial> principal_generator() const;
  /// Irrelevant ideal generated by all variables.
  Ideal irrelevant() const;
  Polynomial one() const { return Polynomial::constant(ring, 1); }
};

/// The p^{-e}-linear map r -> Phi_e(u r) on the ambient ring.
struct FrobeniusDatum {
  unsigned e = 1;
  Polynomial u;
};

/// I^{[p^e]}, generated by the p^e-th powers of the generators.
Ideal bracket_power(const Ideal& I, unsigned e);

/// I^{[1/p^e]}: collect the coefficients of each generator in the basis
/// x^a, 0 <= a_i < p^e, over the p^e-th powers.
Ideal frobenius_root(const Ideal& I, unsigned e);

/// Fedder: (J^{[p]} : J) is not contained in at^{[p]}.
bool fedder_is_fpure(const RingPresentation& R, const Ideal& at);

/// (e = 1, u = f^{p-1}) for J = (f); u = 1 when J = 0.
FrobeniusDatum fedder_element(const RingPresentation& R);

/// u^{(p^e - 1)/(p - 1)}, the datum composed with itself e times.
Polynomial iterated_multiplier(const FrobeniusDatum& d, unsigned e);

}  // namespace fsk
