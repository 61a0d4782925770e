#include "fsk/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "fsk/error.hpp"

namespace fsk {

namespace {

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->compatible_with(*b) && a->order() == b->order());
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const Ring& r = *ring_;
  const PrimeField& k = r.field();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return r.compare(a.mono, b.mono) == Cmp::GT;
  });
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    Coeff c = t.coeff % k.characteristic();
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = k.add(terms_.back().coeff, c);
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (c != 0) {
      terms_.push_back({t.mono, c});
    }
  }
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial f(std::move(ring));
  f.terms_ = std::move(terms);
  return f;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Coeff v = ring->field().reduce(c);
  Monomial one(ring->nvars());
  if (v == 0) return Polynomial(std::move(ring));
  return from_sorted(std::move(ring), {{one, v}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i, std::uint32_t power) {
  Monomial m(ring->nvars());
  m.set(i, power);
  return from_sorted(std::move(ring), {{m, 1}});
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Coeff c) {
  c %= ring->p();
  if (c == 0) return Polynomial(std::move(ring));
  return from_sorted(std::move(ring), {{m, c}});
}

Polynomial Polynomial::basis_vector(RingPtr ring, std::uint32_t component) {
  Monomial m(ring->nvars(), component);
  return from_sorted(std::move(ring), {{m, 1}});
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_))
    throw Error(ErrorKind::RingMismatch, "polynomials live in different rings");
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one() &&
                            terms_[0].mono.component() == 0);
}

long long Polynomial::degree() const noexcept {
  long long d = -1;
  for (const auto& t : terms_) d = std::max<long long>(d, static_cast<long long>(t.mono.degree()));
  return d;
}

long long Polynomial::degree_in(std::size_t var) const noexcept {
  long long d = -1;
  for (const auto& t : terms_) d = std::max<long long>(d, t.mono[var]);
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  std::uint64_t d = ring_->weighted_degree(terms_[0].mono);
  for (const auto& t : terms_)
    if (ring_->weighted_degree(t.mono) != d) return false;
  return true;
}

Polynomial Polynomial::homogeneous_part(std::uint64_t deg) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (ring_->weighted_degree(t.mono) == deg) out.push_back(t);
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  check_ring(o);
  const Ring& r = *ring_;
  const PrimeField& k = r.field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    Cmp c = r.compare(terms_[i].mono, o.terms_[j].mono);
    if (c == Cmp::GT) {
      out.push_back(terms_[i++]);
    } else if (c == Cmp::LT) {
      out.push_back(o.terms_[j++]);
    } else {
      Coeff s = k.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s) out.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), terms_.begin() + i, terms_.end());
  out.insert(out.end(), o.terms_.begin() + j, o.terms_.end());
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::minus_term_times(Coeff c, const Monomial& m, const Polynomial& g) const {
  const Ring& r = *ring_;
  const PrimeField& k = r.field();
  Coeff nc = k.neg(c);
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const std::size_t n = terms_.size(), gn = g.terms_.size();
  Monomial mj;
  bool have = false;
  while (i < n && j < gn) {
    if (!have) {
      mj = m * g.terms_[j].mono;
      have = true;
    }
    Cmp cmp = r.compare(terms_[i].mono, mj);
    if (cmp == Cmp::GT) {
      out.push_back(terms_[i++]);
    } else if (cmp == Cmp::LT) {
      out.push_back({mj, k.mul(nc, g.terms_[j].coeff)});
      ++j;
      have = false;
    } else {
      Coeff s = k.add(terms_[i].coeff, k.mul(nc, g.terms_[j].coeff));
      if (s) out.push_back({mj, s});
      ++i;
      ++j;
      have = false;
    }
  }
  out.insert(out.end(), terms_.begin() + i, terms_.end());
  for (; j < gn; ++j) out.push_back({m * g.terms_[j].mono, k.mul(nc, g.terms_[j].coeff)});
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::times_term(const Monomial& m, Coeff c) const {
  c %= ring_->p();
  if (c == 0 || is_zero()) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono * m, ring_->field().mul(t.coeff, c)});
  // Monomial multiplication preserves the order, except across module components
  // under position-over-term where all components coincide anyway.
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial(ring_ ? ring_ : o.ring_);
  check_ring(o);
  const Polynomial& a = size() <= o.size() ? *this : o;
  const Polynomial& b = size() <= o.size() ? o : *this;
  if (a.size() == 1) return b.times_term(a.terms_[0].mono, a.terms_[0].coeff);
  std::vector<Term> all;
  all.reserve(a.size() * b.size());
  const PrimeField& k = ring_->field();
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) all.push_back({s.mono * t.mono, k.mul(s.coeff, t.coeff)});
  return Polynomial(ring_, std::move(all));
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= ring_->p();
  if (c == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::frobenius_power(unsigned e) const {
  if (e == 0 || is_zero()) return *this;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= ring_->p();
  const PrimeField& k = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono.scaled(q), k.pow(t.coeff, q)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  const PrimeField& k = ring_->field();
  for (const auto& t : terms_) {
    std::uint32_t e = t.mono[var];
    if (e == 0) continue;
    Coeff c = k.mul(t.coeff, k.reduce(e));
    if (c == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, c});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images,
                                  const RingPtr& target) const {
  if (images.size() != ring_->nvars())
    throw Error(ErrorKind::LengthMismatch, "substitution needs one image per variable");
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(images.size());
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      std::uint32_t e = t.mono[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      term = term * pw[e];
    }
    if (t.mono.component()) {
      Monomial c(target->nvars(), t.mono.component());
      term = term.times_term(c, 1);
    }
    result += term;
  }
  return result;
}

Polynomial Polynomial::map_variables(const RingPtr& target,
                                     const std::vector<std::size_t>& map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars(), t.mono.component());
    for (std::size_t i = 0; i < map.size(); ++i)
      if (t.mono[i]) m.set(map[i], m[map[i]] + t.mono[i]);
    out.push_back({m, t.coeff});
  }
  return Polynomial(target, std::move(out));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (!ring_->compatible_with(*target))
    throw Error(ErrorKind::RingMismatch, "target ring has different variables");
  if (ring_->order() == target->order()) return from_sorted(target, terms_);
  return Polynomial(target, terms_);
}

Coeff Polynomial::coeff_of(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

Polynomial Polynomial::component(std::uint32_t i) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.component() != i) continue;
    Monomial m = t.mono;
    m.set_component(0);
    out.push_back({m, t.coeff});
  }
  return Polynomial(ring_, std::move(out));
}

std::uint32_t Polynomial::max_component() const noexcept {
  std::uint32_t c = 0;
  for (const auto& t : terms_) c = std::max(c, t.mono.component());
  return c;
}

bool Polynomial::operator==(const Polynomial& o) const noexcept {
  if (terms_.size() != o.terms_.size()) return false;
  if (terms_.empty()) return true;
  if (!ring_->compatible_with(*o.ring_)) return false;
  if (ring_->order() == o.ring_->order()) {
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
        return false;
    return true;
  }
  return (*this - o.in_ring(ring_)).is_zero();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<Term> ts = terms_;
  MonomialOrder grevlex = MonomialOrder::grevlex();
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
    return monomial_compare(grevlex, a.mono, b.mono) == Cmp::GT;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& t : ts) {
    if (!first) os << '+';
    first = false;
    std::vector<std::string> factors;
    if (t.coeff != 1 || (t.mono.is_one() && t.mono.component() == 0))
      factors.push_back(std::to_string(t.coeff));
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (!t.mono[i]) continue;
      std::string f = ring_->name(i);
      if (t.mono[i] > 1) f += "^" + std::to_string(t.mono[i]);
      factors.push_back(f);
    }
    if (t.mono.component()) factors.push_back("e" + std::to_string(t.mono.component()));
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

Polynomial operator*(std::int64_t c, const Polynomial& f) {
  return f.scaled(f.ring()->field().reduce(c));
}

}  // namespace fsk
