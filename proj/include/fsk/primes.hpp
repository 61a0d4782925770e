#pragma once

#include <optional>
#include <vector>

#include "fsk/ideal.hpp"
#include "fsk/upoly.hpp"

namespace fsk {

/// Restrict a polynomial involving only variable `var` to a UPoly.
UPoly to_upoly(const Polynomial& f, std::size_t var);
Polynomial from_upoly(const UPoly& u, const RingPtr& ring, std::size_t var);

/// Irreducible factors (without multiplicity, monic) of f.
/// Handles univariate polynomials, binary forms, and forms in more variables
/// through a smoothness certificate or a bounded factor search.
/// Throws DecompositionFailure when the search bound is exceeded.
std::vector<Polynomial> irreducible_factors(const Polynomial& f);

/// Standard monomials of a zero-dimensional ideal (nullopt otherwise).
std::optional<std::vector<Monomial>> standard_monomials(const Ideal& I);

/// Minimal polynomial of g modulo a zero-dimensional ideal.
UPoly minimal_polynomial(const Polynomial& g, const Ideal& I);

/// Radical of a zero-dimensional ideal (Seidenberg).
Ideal zero_dim_radical(const Ideal& I);

/// Best-effort primality. Throws DecompositionFailure if no strategy applies.
bool is_prime(const Ideal& I);

/// Minimal primes of a proper ideal. Built-in strategies cover monomial,
/// principal, and zero-dimensional ideals, plus ideals generated by linear
/// forms. With hints, each hint is verified and the verified set returned.
std::vector<Ideal> minimal_primes(const Ideal& I, const std::vector<Ideal>& hints = {});

/// First F_p-linear combination of `gens` (fixed enumeration order) lying
/// outside every ideal in `avoid`, or nullopt after `limit` candidates.
std::optional<Polynomial> avoiding_combination(const std::vector<Polynomial>& gens,
                                               const std::vector<Ideal>& avoid,
                                               std::uint64_t limit = 200000);

/// Element of B outside every ideal in `avoid`: combinations of the basis
/// first, then of basis elements times monomials of degree up to
/// `extra_degree`.
std::optional<Polynomial> element_avoiding(const Ideal& B, const std::vector<Ideal>& avoid,
                                            unsigned extra_degree = 2);

/// Keep only the inclusion-minimal ideals, dropping duplicates.
std::vector<Ideal> minimal_elements(std::vector<Ideal> ideals);

}  // namespace fsk
