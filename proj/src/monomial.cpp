#include "fsk/monomial.hpp"

#include <algorithm>
#include <string>

#include "fsk/error.hpp"

namespace fsk {

Monomial::Monomial(std::size_t nvars, std::uint32_t component) : comp_(component) {
  if (nvars > kMaxVars)
    throw Error(ErrorKind::InvalidArgument,
                "at most " + std::to_string(kMaxVars) + " variables are supported");
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::span<const std::uint32_t> exps, std::uint32_t component)
    : Monomial(exps.size(), component) {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    exp_[i] = exps[i];
    deg_ += exps[i];
  }
}

Monomial Monomial::operator*(const Monomial& o) const noexcept {
  Monomial r = *this;
  for (std::size_t i = 0; i < n_; ++i) r.exp_[i] += o.exp_[i];
  r.deg_ = deg_ + o.deg_;
  r.comp_ = std::max(comp_, o.comp_);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const noexcept {
  Monomial r = *this;
  for (std::size_t i = 0; i < n_; ++i) r.exp_[i] -= o.exp_[i];
  r.deg_ = deg_ - o.deg_;
  r.comp_ = o.comp_ == comp_ ? 0 : comp_;
  return r;
}

bool Monomial::divides(const Monomial& o) const noexcept {
  if (comp_ != 0 && comp_ != o.comp_) return false;
  if (deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < n_; ++i)
    if (exp_[i] > o.exp_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const noexcept {
  Monomial r = *this;
  r.deg_ = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    r.exp_[i] = std::max(exp_[i], o.exp_[i]);
    r.deg_ += r.exp_[i];
  }
  r.comp_ = std::max(comp_, o.comp_);
  return r;
}

bool Monomial::coprime(const Monomial& o) const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    if (exp_[i] && o.exp_[i]) return false;
  return true;
}

Monomial Monomial::scaled(std::uint64_t factor) const {
  Monomial r = *this;
  r.deg_ = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t e = static_cast<std::uint64_t>(exp_[i]) * factor;
    if (e > 0xffffffffULL) throw Error(ErrorKind::InvalidArgument, "exponent overflow");
    r.exp_[i] = static_cast<std::uint32_t>(e);
    r.deg_ += e;
  }
  return r;
}

std::uint32_t Monomial::divmask() const noexcept {
  // Two bits per variable: exponent >= 1 and exponent >= 2 (wraps for n > 16).
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (exp_[i] >= 1) mask |= 1u << (i % 16);
    if (exp_[i] >= 2) mask |= 1u << (16 + i % 16);
  }
  return mask;
}

namespace {

Cmp grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? Cmp::GT : Cmp::LT;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

Cmp term_compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  const std::size_t n = a.size();
  switch (order.kind) {
    case MonomialOrder::Kind::Grevlex: {
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? Cmp::GT : Cmp::LT;
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? Cmp::GT : Cmp::LT;
      }
      return Cmp::EQ;
    }
    case MonomialOrder::Kind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? Cmp::GT : Cmp::LT;
      }
      return Cmp::EQ;
    case MonomialOrder::Kind::Elimination: {
      std::size_t k = std::min(order.block, n);
      Cmp c = grevlex_range(a, b, 0, k);
      if (c != Cmp::EQ) return c;
      return grevlex_range(a, b, k, n);
    }
  }
  return Cmp::EQ;
}

Cmp component_compare(const Monomial& a, const Monomial& b) {
  if (a.component() == b.component()) return Cmp::EQ;
  return a.component() < b.component() ? Cmp::GT : Cmp::LT;
}

}  // namespace

Cmp monomial_compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::LengthMismatch, "monomials of different lengths compared");
  if (order.position_over_term) {
    Cmp c = component_compare(a, b);
    return c != Cmp::EQ ? c : term_compare(order, a, b);
  }
  Cmp c = term_compare(order, a, b);
  return c != Cmp::EQ ? c : component_compare(a, b);
}

}  // namespace fsk
