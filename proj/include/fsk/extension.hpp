#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsk/cech.hpp"
#include "fsk/compatible.hpp"

namespace fsk {

/// A finite R-algebra S = ring/(J + relations), where `ring` has the
/// adjoined variables first and R's variables after them.
struct ExtensionPresentation {
  RingPresentation base;
  RingPtr ring;
  std::vector<std::string> adjoined;
  /// One relation per adjoined variable, monic in it with coefficients in R.
  std::vector<Polynomial> monic;
  /// Everything else (saturation relations, quotients); may involve any variable.
  std::vector<Polynomial> relations;
  /// Per adjoined variable: true when it only contributes its monic relation.
  std::vector<bool> free_over_base;

  /// Set by build_extension: S = R'[T_w]/((X T_w - c) : X^∞) with R' free
  /// over R, so the trace can be computed through the conductor.
  struct Birational {
    std::size_t var;  // index into `adjoined`
    Polynomial c;     // numerator in `ring`
    Polynomial X;     // denominator in `ring`, a product of parameters
  };
  std::vector<Birational> birational;

  std::size_t nadjoined() const { return adjoined.size(); }
  /// R's polynomial moved into `ring`.
  Polynomial embed(const Polynomial& f) const;
  Ideal embed(const Ideal& I) const;
  /// Adjoined variable i as an element of `ring`.
  Polynomial variable(std::size_t i) const { return Polynomial::variable(ring, i); }
  /// J + monic + relations.
  Ideal ideal() const;
  /// Degree of the monic relation of variable i.
  std::uint32_t monic_degree(std::size_t i) const;

  /// S = R with no adjoined variables.
  static ExtensionPresentation identity(const RingPresentation& R);
  /// Ring for `names` adjoined to R (elimination order on the adjoined block).
  static RingPtr extension_ring(const RingPresentation& R, const std::vector<std::string>& names);
};

struct EtaleWitness {
  std::size_t var;
  Polynomial relation;
  Polynomial derivative;   // in R's ambient ring
  Polynomial normal_form;  // derivative reduced against the prime; nonzero when certified
};

struct EtaleCertificate {
  Ideal prime;
  std::vector<EtaleWitness> witnesses;
  bool certified = false;
  std::string failure;  // offending relation when not certified
};

/// Element of K ∩ (∩ inside) outside every ideal in `avoid`.
Polynomial avoidance_element(const Ideal& K, const std::vector<Ideal>& inside,
                             const std::vector<Ideal>& avoid);

/// Is P a minimal prime of (xs) + J?
bool is_parameter_system(const RingPresentation& R, const Ideal& P, const std::vector<Polynomial>& xs);

/// Homogeneous x_1..x_N, N the largest height, such that the first d_i form
/// a system of parameters at component i and no x_k lies in any Q.
std::vector<Polynomial> choose_parameters(const RingPresentation& R, const std::vector<Ideal>& components,
                                          const std::vector<Ideal>& Q);

/// Monic relation for a root t of g(t/E) = r/z, g = T^p - uT, where
/// z = ∏ x_i^{s_i} and E = ∏ x_i^{ceil(s_i/p)}:
/// T^p - u E^{p-1} T - r E^p / z, with derivative -u E^{p-1}.
struct MonicRelation {
  Polynomial linear;    // u E^{p-1}
  Polynomial constant;  // r E^p / z
  Polynomial scale;     // E
  /// The relation in `ring`, variable `var`; `embed` moves R's polynomials.
  template <class Embed>
  Polynomial in(const RingPtr& ring, std::size_t var, Embed&& embed) const {
    const std::uint64_t p = ring->p();
    Polynomial T = Polynomial::variable(ring, var);
    return T.pow(p) - embed(linear) * T - embed(constant);
  }
  Polynomial derivative() const { return -linear; }
};

MonicRelation monicize(const Polynomial& u, const LocalizedFraction& entry, const CechContext& ctx);

/// Certificate that every monic relation is separable at Q: its derivative
/// lies in R and outside Q.
EtaleCertificate etale_certificate(const ExtensionPresentation& S, const Ideal& Q);

struct BuildOptions {
  EnumerateOptions enumerate;
  /// Hints for the components of I.
  std::vector<Ideal> component_hints;
  bool domain = false;
  unsigned globalize_power = 64;
};

/// Per-component record kept for verification.
struct ComponentWitness {
  Ideal prime;
  unsigned height = 0;
  SocleDatum socle;  // unset fields when height is 0
  std::size_t var = 0;
  bool class_dies = false;
};

struct BuildResult {
  ExtensionPresentation S;
  std::vector<Ideal> components;
  std::vector<Ideal> avoid;  // compatible primes not containing I
  std::vector<Polynomial> params;
  std::vector<ComponentWitness> witnesses;
  std::vector<EtaleCertificate> etale;
  /// Domain mode: the R-kernel of R -> S computed by elimination (J itself
  /// when injective).
  std::optional<Ideal> injectivity_kernel;
  /// Domain mode: a smooth closed point of R over which the free part of the
  /// tower has a field as fiber; this forces S to be a domain.
  std::optional<Ideal> domain_point;
};

BuildResult build_extension(const RingPresentation& R, const Ideal& I, const BuildOptions& opts = {});

}  // namespace fsk
