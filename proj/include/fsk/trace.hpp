#pragma once

#include <optional>
#include <vector>

#include "fsk/extension.hpp"

namespace fsk {

/// S as an R-module: generators are the monomials of the adjoined variables
/// below their monic degrees; column c of `relations` is an R-relation.
struct ModulePresentation {
  std::vector<Monomial> basis;  // exponents of the adjoined variables only
  PolyMatrix relations;         // rows = basis, entries in R's ambient ring
  std::size_t index_of_one = 0;
};

ModulePresentation module_presentation(const ExtensionPresentation& S);

/// Hom_R(coker M, R): each generator lists the values on the module
/// generators, verified to kill every relation modulo J.
struct HomPresentation {
  std::vector<std::vector<Polynomial>> generators;
};

HomPresentation hom_presentation(const ModulePresentation& M, const RingPresentation& R);

enum class TraceRoute { Auto, Hom, Conductor };

/// Image of evaluation at 1, as an ideal of R's ambient ring containing J.
/// The conductor route needs the birational data recorded by build_extension.
Ideal trace_ideal(const ExtensionPresentation& S, TraceRoute route = TraceRoute::Auto);

/// trace_ideal(S) ⊄ Q.
bool is_split_at(const ExtensionPresentation& S, const Ideal& Q);
bool is_split_at(const Ideal& trace, const Ideal& Q);

struct VerificationReport {
  Ideal tau;
  bool equals_input = false;
  std::vector<std::pair<Ideal, bool>> etale_certified;
  std::vector<std::pair<Ideal, bool>> split_at;  // splitting evidence per Q
  std::vector<std::pair<Ideal, bool>> class_death;
  bool radical_check = false;
  bool compatible = false;
};

/// Recomputes everything from S: the trace, étale certificates and splitting
/// at every compatible prime not containing I, and class death at the
/// components of I (τ ⊆ P, the trace form of the non-injectivity test).
VerificationReport verify_main_theorem(const RingPresentation& R, const Ideal& I,
                                       const ExtensionPresentation& S,
                                       const EnumerateOptions& opts = {});

}  // namespace fsk
