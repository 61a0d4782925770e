#pragma once

#include <cstdint>
#include <vector>

namespace fsk {

using Coeff = std::uint32_t;

/// Arithmetic in F_p for a word-sized prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  Coeff characteristic() const noexcept { return p_; }

  Coeff reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  /// Throws Error(DivisionByZero) for a == 0.
  Coeff inv(Coeff a) const;

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

  /// Deterministic Miller-Rabin, exact for all 64-bit inputs.
  static bool is_prime(std::uint64_t n) noexcept;

 private:
  Coeff p_;
};

}  // namespace fsk
