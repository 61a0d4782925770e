#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace fsk {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector over at most kMaxVars variables, optionally tagged with a
/// free-module component (0 for ring elements, 1..r for basis vector e_i).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars, std::uint32_t component = 0);
  Monomial(std::span<const std::uint32_t> exps, std::uint32_t component = 0);

  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator[](std::size_t i) const noexcept { return exp_[i]; }
  void set(std::size_t i, std::uint32_t e) noexcept {
    deg_ = deg_ - exp_[i] + e;
    exp_[i] = e;
  }
  std::uint32_t component() const noexcept { return comp_; }
  void set_component(std::uint32_t c) noexcept { comp_ = c; }
  std::uint64_t degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }

  /// Product; components combine as max (at most one side may be nonzero).
  Monomial operator*(const Monomial& o) const noexcept;
  /// Requires divides(o, *this).
  Monomial operator/(const Monomial& o) const noexcept;
  bool divides(const Monomial& o) const noexcept;  // *this | o
  /// Least common multiple; components must agree.
  Monomial lcm(const Monomial& o) const noexcept;
  bool coprime(const Monomial& o) const noexcept;
  Monomial scaled(std::uint64_t factor) const;
  /// Bit signature used for fast divisibility rejection.
  std::uint32_t divmask() const noexcept;

  bool operator==(const Monomial& o) const noexcept {
    return n_ == o.n_ && comp_ == o.comp_ && exp_ == o.exp_;
  }

 private:
  std::array<std::uint32_t, kMaxVars> exp_{};
  std::uint64_t deg_ = 0;
  std::uint32_t comp_ = 0;
  std::uint8_t n_ = 0;
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

/// Term orders. Elimination(k) compares the first k variables by grevlex
/// and breaks ties with grevlex on the remaining ones. Module components are
/// ordered term-over-position unless position_over_term is set; lower
/// component index ranks higher.
struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Elimination };
  Kind kind = Kind::Grevlex;
  std::size_t block = 0;
  bool position_over_term = false;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, 0, false}; }
  static MonomialOrder elimination(std::size_t k) { return {Kind::Elimination, k, false}; }

  bool operator==(const MonomialOrder& o) const noexcept {
    return kind == o.kind && block == o.block && position_over_term == o.position_over_term;
  }
};

/// Throws Error(LengthMismatch) when the exponent vectors differ in length.
Cmp monomial_compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

}  // namespace fsk
