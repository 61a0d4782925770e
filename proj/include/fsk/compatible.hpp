#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fsk/frobenius.hpp"

namespace fsk {

/// Preimage of phi(F_* I) for the datum: the root of u I + J^{[q]}.
Ideal phi_image(const Ideal& I, const FrobeniusDatum& d, const RingPresentation& R);

/// u I ⊆ I^{[q]} + J^{[q]}, q = p^e.
bool is_compatible(const Ideal& I, const FrobeniusDatum& d, const RingPresentation& R);

/// phi(F_* I) = I.
bool is_fixed(const Ideal& I, const FrobeniusDatum& d, const RingPresentation& R);

/// Smallest compatible ideal containing I + J.
Ideal compatible_closure(const Ideal& I, const FrobeniusDatum& d, const RingPresentation& R,
                         unsigned cap = 64);

/// Closure of (c) + J for a Jacobian element c outside the minimal primes of
/// J. With `c` given, that element is used instead (it is validated).
Ideal test_ideal(const FrobeniusDatum& d, const RingPresentation& R,
                 const std::optional<Polynomial>& c = std::nullopt);

/// Element c ∉ P whose closure is the test ideal of the datum restricted to
/// R/P: a Jacobian minor of P times a generator of
/// ((u) + P^{[p]}) : (P^{[p]} : P).
Polynomial restricted_test_element(const Ideal& P, const FrobeniusDatum& d);

/// Test ideal of the datum on ring/P, P a compatible prime.
Ideal restricted_test_ideal(const Ideal& P, const FrobeniusDatum& d, unsigned cap = 64);

/// Descending iteration from `at`; the largest compatible ideal inside it.
Ideal splitting_prime(const FrobeniusDatum& d, const RingPresentation& R, const Ideal& at,
                      unsigned cap = 64);

struct CompatibleLattice {
  std::vector<Ideal> primes;          // compatible primes, canonical
  std::vector<Ideal> minimal_primes;  // minimal primes of J
  std::vector<Ideal> ideals;          // all distinct intersections of primes
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // ideals[a] ⊊ ideals[b]
  std::uint64_t max_generator_degree = 0;

  /// Covering pairs of the containment order.
  std::vector<std::pair<std::size_t, std::size_t>> hasse() const;
};

struct EnumerateOptions {
  std::size_t prime_cap = 4096;
  unsigned closure_cap = 64;
  /// Claimed minimal primes for specific ideals, used when an ideal equals
  /// the first member of a pair.
  std::vector<std::pair<Ideal, std::vector<Ideal>>> hints;
};

CompatibleLattice enumerate_compatible(const FrobeniusDatum& d, const RingPresentation& R,
                                       const EnumerateOptions& opts = {});

}  // namespace fsk
