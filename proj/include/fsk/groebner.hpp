#pragma once

#include <vector>

#include "fsk/polynomial.hpp"

namespace fsk {

/// Reduced Groebner basis (monic, tail-reduced, sorted by descending leading
/// monomial) of the ideal or submodule generated by `gens`, under the order of
/// `ring`. All generators must live in `ring`. Buchberger with Gebauer-Moeller
/// pair elimination; pairs are selected by sugar degree, ties by smallest lcm.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring);

/// Full reduction of f by `basis` (any generating set; the result is the
/// canonical normal form when `basis` is a Groebner basis).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis);

/// True when every S-polynomial of `basis` reduces to zero.
bool is_groebner_basis(const std::vector<Polynomial>& basis);

/// Cofactors c with f = sum c_i gens_i, or empty optional when f is not in
/// the ideal (or submodule) they generate.
std::optional<std::vector<Polynomial>> lift(const Polynomial& f,
                                            const std::vector<Polynomial>& gens);

/// Generators of the syzygy module {c : sum c_i gens_i = 0}, as vectors with
/// components 1..gens.size().
std::vector<Polynomial> syzygies(const std::vector<Polynomial>& gens);

}  // namespace fsk
