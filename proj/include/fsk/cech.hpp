#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "fsk/frobenius.hpp"
#include "fsk/linalg.hpp"

namespace fsk {

/// numerator / ∏ params[i]^{exps[i]}; exponents outside the entry's subset
/// stay zero.
struct LocalizedFraction {
  Polynomial num;
  std::vector<std::uint32_t> exps;
};

/// Level-t cochain: one fraction per t-subset of the parameters, subsets in
/// lexicographic order (see cech_subsets).
struct CechCochain {
  unsigned level = 0;
  std::vector<LocalizedFraction> entries;
};

/// Parameters x_1..x_d over R, plus an element h outside P used to localize
/// at P: classes are tested against ((x^s) + J) : h^∞. h = 1 at the
/// irrelevant ideal.
struct CechContext {
  RingPresentation R;
  std::vector<Polynomial> params;
  Polynomial h;

  CechContext(RingPresentation r, std::vector<Polynomial> ps, std::optional<Polynomial> loc = {});
  std::size_t d() const { return params.size(); }
  Polynomial param_power(const std::vector<std::uint32_t>& exps) const;
  /// Elements a with a/(x_1..x_d)^s = 0 in the top local cohomology at h:
  /// the union over k of ((x^{s+k}) + J) : (x_1..x_d)^k, saturated by h.
  Ideal local_power_ideal(std::uint32_t s) const;

 private:
  std::shared_ptr<std::map<std::uint32_t, Ideal>> cache_ =
      std::make_shared<std::map<std::uint32_t, Ideal>>();
};

/// t-subsets of {0..d-1} in lexicographic order.
std::vector<std::vector<std::size_t>> cech_subsets(std::size_t d, std::size_t t);

CechCochain zero_cochain(const CechContext& ctx, unsigned level);
/// Level-d cochain num / (x_1..x_d)^s.
CechCochain top_cochain(const CechContext& ctx, const Polynomial& num, std::uint32_t s);

/// (∂c)_T = Σ_k (-1)^k c_{T \ T_k}, T_k the k-th element of T.
CechCochain cech_differential(const CechCochain& c, const CechContext& ctx);

/// Entrywise zero test in the localizations R_{x_T} (numerators in J : x_T^∞).
bool cochain_is_zero(const CechCochain& c, const CechContext& ctx);
CechCochain cochain_sub(const CechCochain& a, const CechCochain& b, const CechContext& ctx);

/// Top-level class test: a/(x_1..x_d)^s is zero iff a ∈ ((x^s) + J) : h^∞.
bool class_is_zero(const CechCochain& c, const CechContext& ctx);

/// Degree-`degree` part of H^d at denominator level s, as the cokernel of
/// the Čech boundary C^{d-1} → C^d on graded pieces of R = ring/J.
struct GradedStrand {
  long degree = 0;
  std::uint32_t s = 0;
  std::vector<Monomial> basis;  // standard monomials m, labels m / X^s
  Matrix boundary;              // columns: images of C^{d-1} basis elements
  std::size_t rank = 0;
  std::size_t dimension() const { return basis.size() - rank; }
};

GradedStrand strand_at(const CechContext& ctx, long degree, std::uint32_t s);
/// Doubles s from s_start (default p) until two consecutive dimensions
/// agree; throws BoundExceeded past `cap` (default p^3).
GradedStrand strand_cohomology(const CechContext& ctx, long degree,
                               std::optional<std::uint32_t> s_start = std::nullopt,
                               std::optional<std::uint32_t> cap = std::nullopt);
/// Rank test: does the homogeneous top cochain vanish in the strand?
bool strand_class_is_zero(const CechCochain& c, const CechContext& ctx);

struct SocleDatum {
  Ideal prime;
  unsigned height = 0;
  std::vector<Polynomial> params;
  Polynomial h;        // localizing element, 1 at the irrelevant ideal
  Polynomial lambda;   // alpha = lambda / (x_1..x_d)
  CechCochain alpha;
  Polynomial u;

  CechContext context(const RingPresentation& R) const { return CechContext(R, params, h); }
};

/// Socle generator of H^d_P(R_P) as lambda/(x_1..x_d) with lambda in
/// (Q_1 : P) \ Q_1, and u with class(alpha^p) = u class(alpha).
/// `avoid` steers the choice of h away from the given primes.
SocleDatum socle_datum(const RingPresentation& R, const Ideal& P,
                       const std::vector<Polynomial>& params,
                       const std::vector<Ideal>& avoid = {});

/// Replace u by u + a, a ∈ ∩ components ∩ (maximal Q not containing u),
/// a outside the maximal Q containing u. Re-certifies the class equation.
SocleDatum adjust_u(const SocleDatum& datum, const RingPresentation& R,
                    const std::vector<Ideal>& components, const std::vector<Ideal>& Q);

/// Certificates: class(alpha) ≠ 0, P class(alpha) = 0, class(alpha^p - u alpha) = 0.
bool certify_socle(const SocleDatum& datum, const RingPresentation& R);

/// Rescale lambda by a power of h so that lambda^p - u lambda X^{p-1}
/// lies in (x^p) + J, not merely in its P-primary part.
SocleDatum globalize(const SocleDatum& datum, const RingPresentation& R, unsigned max_power = 64);

/// g(alpha) = alpha^p - u alpha as a top cochain over X^p.
CechCochain apply_additive(const Polynomial& u, const CechCochain& alpha, const CechContext& ctx);

/// beta at level d-1 with g(alpha) = ∂beta for g = T^p - uT, from a lift of
/// the numerator onto (x^p) + J. Verified exactly; throws BoundExceeded
/// if the numerator does not lie in (x^p) + J.
CechCochain solve_coboundary(const Polynomial& u, const CechCochain& alpha, const CechContext& ctx);

}  // namespace fsk
