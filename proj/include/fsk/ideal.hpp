#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fsk/groebner.hpp"

namespace fsk {

/// Ideal of a polynomial ring given by generators. The reduced Groebner basis
/// under the ring's order is computed on first use and shared between copies.
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(RingPtr ring, std::vector<Polynomial> gens = {});

  static Ideal unit(RingPtr ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }
  const std::vector<Polynomial>& basis() const;

  bool is_zero() const { return basis().empty(); }
  bool is_unit() const;
  bool is_homogeneous() const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& o) const;
  Polynomial normal_form(const Polynomial& f) const;

  /// Equality of reduced Groebner bases.
  bool operator==(const Ideal& o) const;
  bool operator!=(const Ideal& o) const { return !(*this == o); }

  /// Same ideal with the reduced basis as generators, in the grevlex ring.
  Ideal canonical() const;
  /// Grevlex reduced basis as strings.
  std::vector<std::string> canonical_strings() const;
  std::string to_string() const;

  /// Same generators moved to another ring with the same variables.
  Ideal in_ring(const RingPtr& target) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator*(const Ideal& a, const Ideal& b);
/// Ideal plus extra generators.
Ideal operator+(const Ideal& a, const std::vector<Polynomial>& extra);

enum class CombineOp { Sum, Product };
Ideal ideal_combine(CombineOp op, const Ideal& a, const Ideal& b);

/// I ∩ J by eliminating t from tI + (1-t)J.
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(const std::vector<Ideal>& ideals);
/// (I : g).
Ideal quotient(const Ideal& a, const Polynomial& g);
/// (I : J), the intersection of (I : g) over generators g of J.
Ideal quotient(const Ideal& a, const Ideal& b);
/// (I : f^∞) via Rabinowitsch elimination of t from I + (1 - t f).
Ideal saturate(const Ideal& a, const Polynomial& f);
/// (I : J^∞), the intersection of (I : g^∞) over generators g of J.
Ideal saturate(const Ideal& a, const Ideal& b);
/// I ∩ k[remaining variables], returned in the same ring.
Ideal eliminate(const Ideal& a, const std::vector<std::size_t>& vars);
/// Krull dimension of ring/I; throws for the unit ideal.
std::size_t dimension(const Ideal& a);
/// f ∈ √I via 1 ∈ I + (1 - t f).
bool radical_membership(const Polynomial& f, const Ideal& a);
/// Exact quotient h / g, or nullopt when g does not divide h.
std::optional<Polynomial> divide_exact(const Polynomial& h, const Polynomial& g);

/// Columns of M are gens of the image; returns generators of {v : M v = 0}
/// as coordinate lists of length M.cols. Entries are ring polynomials.
using PolyMatrix = std::vector<std::vector<Polynomial>>;  // row-major
std::vector<std::vector<Polynomial>> syzygy_kernel(const PolyMatrix& m, const RingPtr& ring);

}  // namespace fsk
