#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fsk/field.hpp"

namespace fsk {

/// Dense univariate polynomial over F_p, coefficient i at index i, no
/// trailing zeros. The zero polynomial is the empty vector.
using UPoly = std::vector<Coeff>;

namespace upoly {

void trim(UPoly& a);
inline long degree(const UPoly& a) { return static_cast<long>(a.size()) - 1; }
UPoly add(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly sub(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly mul(const PrimeField& F, const UPoly& a, const UPoly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> divmod(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly mod(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly monic(const PrimeField& F, const UPoly& a);
UPoly gcd(const PrimeField& F, UPoly a, UPoly b);
UPoly derivative(const PrimeField& F, const UPoly& a);
/// a^e mod m.
UPoly powmod(const PrimeField& F, UPoly a, std::uint64_t e, const UPoly& m);

/// Monic irreducible factors with multiplicities; constant factor dropped.
std::vector<std::pair<UPoly, unsigned>> factor(const PrimeField& F, const UPoly& a);
bool is_irreducible(const PrimeField& F, const UPoly& a);
/// Distinct roots in F_p.
std::vector<Coeff> roots(const PrimeField& F, const UPoly& a);

}  // namespace upoly
}  // namespace fsk
