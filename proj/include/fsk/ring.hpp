#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fsk/field.hpp"
#include "fsk/monomial.hpp"

namespace fsk {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Ambient polynomial ring F_p[x_1..x_n] together with the term order its
/// polynomials are sorted under. Immutable; shared by pointer.
class Ring {
 public:
  Ring(std::uint64_t p, std::vector<std::string> names,
       MonomialOrder order = MonomialOrder::grevlex(),
       std::vector<std::uint32_t> weights = {});

  static RingPtr make(std::uint64_t p, std::vector<std::string> names,
                      MonomialOrder order = MonomialOrder::grevlex(),
                      std::vector<std::uint32_t> weights = {});

  const PrimeField& field() const noexcept { return field_; }
  Coeff p() const noexcept { return field_.characteristic(); }
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<std::uint32_t>& weights() const noexcept { return weights_; }
  std::uint64_t weighted_degree(const Monomial& m) const noexcept;

  Cmp compare(const Monomial& a, const Monomial& b) const {
    return monomial_compare(order_, a, b);
  }

  /// Same variables and field, different order.
  RingPtr with_order(MonomialOrder order) const;
  /// `front` followed by the current variables, under `order`.
  RingPtr with_prefix(const std::vector<std::string>& front, MonomialOrder order) const;
  /// Current variables followed by `back`, under `order`.
  RingPtr with_suffix(const std::vector<std::string>& back, MonomialOrder order) const;

  /// Same characteristic and variable names (orders may differ).
  bool compatible_with(const Ring& o) const noexcept {
    return field_ == o.field_ && names_ == o.names_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<std::uint32_t> weights_;
};

}  // namespace fsk
