#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fsk/ring.hpp"

namespace fsk {

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse polynomial (or free-module vector, when monomials carry components)
/// with terms sorted strictly descending under the ring's order and no zero
/// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Terms are sorted and combined; zero coefficients dropped.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t i, std::uint32_t power = 1);
  static Polynomial monomial(RingPtr ring, Monomial m, Coeff c = 1);
  /// e_component as a module vector.
  static Polynomial basis_vector(RingPtr ring, std::uint32_t component);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Nonzero constant.
  bool is_unit() const noexcept { return is_constant() && !is_zero(); }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }
  /// Total degree of the largest term; -1 for zero.
  long long degree() const noexcept;
  long long degree_in(std::size_t var) const noexcept;
  bool is_homogeneous() const noexcept;
  /// Homogeneous component of the given standard degree.
  Polynomial homogeneous_part(std::uint64_t deg) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(Coeff c) const;
  Polynomial times_term(const Monomial& m, Coeff c) const;
  /// this - c*m*g, the basic reduction step.
  Polynomial minus_term_times(Coeff c, const Monomial& m, const Polynomial& g) const;
  Polynomial pow(std::uint64_t e) const;
  Polynomial monic() const;

  /// f^{p^e}, computed termwise.
  Polynomial frobenius_power(unsigned e) const;
  Polynomial derivative(std::size_t var) const;
  /// Substitute polynomials (in `target`'s ring) for every variable.
  Polynomial substitute(const std::vector<Polynomial>& images, const RingPtr& target) const;
  /// Relabel variables: variable i goes to variable map[i] of `target`.
  Polynomial map_variables(const RingPtr& target, const std::vector<std::size_t>& map) const;
  /// Same variables, new ring (typically a different order).
  Polynomial in_ring(const RingPtr& target) const;

  /// Coefficient of the given monomial (0 if absent).
  Coeff coeff_of(const Monomial& m) const;
  /// Module vector: component i as a ring polynomial (component tag removed).
  Polynomial component(std::uint32_t i) const;
  std::uint32_t max_component() const noexcept;

  bool operator==(const Polynomial& o) const noexcept;
  bool operator!=(const Polynomial& o) const noexcept { return !(*this == o); }

  /// Canonical text: grevlex descending, explicit `*` and `^`.
  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Convenience: parse-free builders used in code and tests.
Polynomial operator*(std::int64_t c, const Polynomial& f);

/// Multiply a module vector by a ring element (components preserved).
inline Polynomial scale_vector(const Polynomial& v, const Polynomial& f) { return f * v; }

}  // namespace fsk
