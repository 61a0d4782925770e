#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fsk/trace.hpp"

namespace fsk {

/// A parsed input file:
///
///   ring { p = 2 ; vars = x y ; mod = x*y }
///   ideal I = x, y
///   extend S { var = T ; rel = T^2 - T ; rel = (x+y)*T - x }
///   hint I = [ x ] [ y ]
///
/// `#` starts a comment. Statements start with a keyword at the beginning of
/// a line and run until the next one. Inside `extend`, the first `rel` is the
/// monic relation of `var`; further `rel` items are extra relations and an
/// optional `frac = c / X` records that `var` is the fraction c/X. A stanza
/// without `var` only carries relations.
struct JobSpec {
  RingPresentation ring;
  std::vector<std::pair<std::string, Ideal>> ideals;
  std::vector<std::pair<std::string, ExtensionPresentation>> extensions;
  std::vector<std::pair<std::string, std::vector<Ideal>>> hints;

  const Ideal& ideal(const std::string& name) const;
  const ExtensionPresentation& extension(const std::string& name) const;
  /// Claimed minimal primes for the named ideal (empty when none).
  std::vector<Ideal> hints_for(const std::string& name) const;
  /// Enumeration options carrying every hint.
  EnumerateOptions enumerate_options() const;
};

JobSpec parse_spec(std::string_view text);
JobSpec read_spec_file(const std::string& path);

/// Inverse of parse_spec on canonical forms.
std::string print_spec(const JobSpec& job);
std::string print_ring(const RingPresentation& R);
/// Ring block of S.base followed by one `extend` stanza per adjoined variable.
std::string print_extension(const ExtensionPresentation& S, const std::string& name = "S");

enum class LatticeFormat { Json, Dot };

std::string emit_lattice(const CompatibleLattice& L, const RingPresentation& R, LatticeFormat format);
std::string report_json(const VerificationReport& rep);

}  // namespace fsk
