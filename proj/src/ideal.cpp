#include "fsk/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "fsk/error.hpp"

namespace fsk {

namespace {

void require_same(const Ideal& a, const Ideal& b) {
  if (!a.ring()->compatible_with(*b.ring()))
    throw Error(ErrorKind::RingMismatch, "ideals live in different rings");
}

RingPtr grevlex_of(const RingPtr& r) {
  if (r->order() == MonomialOrder::grevlex()) return r;
  return r->with_order(MonomialOrder::grevlex());
}

std::string fresh_name(const Ring& r, const std::string& stem) {
  std::string n = stem;
  while (r.index_of(n)) n += "_";
  return n;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.ring()->compatible_with(*ring_))
      throw Error(ErrorKind::RingMismatch, "generator from a different ring");
    gens_.push_back(g.in_ring(ring_));
  }
}

const std::vector<Polynomial>& Ideal::basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = buchberger(gens_, ring_); });
  return cache_->basis;
}

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b[0].is_unit();
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

Polynomial Ideal::normal_form(const Polynomial& f) const { return reduce(f.in_ring(ring_), basis()); }

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& o) const {
  require_same(*this, o);
  for (const auto& g : o.gens())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::operator==(const Ideal& o) const {
  require_same(*this, o);
  if (ring_->order() == o.ring_->order()) {
    const auto& a = basis();
    const auto& b = o.basis();
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
  }
  return contains(o) && o.contains(*this);
}

Ideal Ideal::canonical() const {
  RingPtr g = grevlex_of(ring_);
  Ideal moved = in_ring(g);
  return Ideal(g, moved.basis());
}

std::vector<std::string> Ideal::canonical_strings() const {
  std::vector<std::string> out;
  Ideal c = canonical();
  for (const auto& b : c.gens()) out.push_back(b.to_string());
  return out;
}

std::string Ideal::to_string() const {
  std::string s = "(";
  auto strs = canonical_strings();
  for (std::size_t i = 0; i < strs.size(); ++i) s += (i ? ", " : "") + strs[i];
  if (strs.empty()) s += "0";
  return s + ")";
}

Ideal Ideal::in_ring(const RingPtr& target) const {
  if (target == ring_) return *this;
  std::vector<Polynomial> g;
  for (const auto& p : gens_) g.push_back(p.in_ring(target));
  return Ideal(target, std::move(g));
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  std::vector<Polynomial> g = a.gens();
  for (const auto& p : b.gens()) g.push_back(p.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(g));
}

Ideal operator+(const Ideal& a, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> g = a.gens();
  for (const auto& p : extra) g.push_back(p.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(g));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  std::vector<Polynomial> g;
  for (const auto& p : a.gens())
    for (const auto& q : b.gens()) g.push_back(p * q.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_combine(CombineOp op, const Ideal& a, const Ideal& b) {
  return op == CombineOp::Sum ? a + b : a * b;
}

Ideal eliminate(const Ideal& a, const std::vector<std::size_t>& vars) {
  const RingPtr& r = a.ring();
  const std::size_t n = r->nvars();
  std::vector<bool> elim(n, false);
  for (auto v : vars) {
    if (v >= n) throw Error(ErrorKind::InvalidArgument, "elimination variable out of range");
    elim[v] = true;
  }
  // New order: eliminated variables first.
  std::vector<std::size_t> to_new(n);
  std::vector<std::string> names;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (elim[i]) {
      to_new[i] = names.size();
      names.push_back(r->name(i));
      ++k;
    }
  for (std::size_t i = 0; i < n; ++i)
    if (!elim[i]) {
      to_new[i] = names.size();
      names.push_back(r->name(i));
    }
  RingPtr er = Ring::make(r->p(), names, MonomialOrder::elimination(k));
  std::vector<Polynomial> g;
  for (const auto& p : a.gens()) g.push_back(p.map_variables(er, to_new));
  std::vector<Polynomial> gb = buchberger(g, er);
  std::vector<std::size_t> back(n);
  for (std::size_t i = 0; i < n; ++i) back[to_new[i]] = i;
  std::vector<Polynomial> kept;
  for (const auto& p : gb) {
    bool free = true;
    for (const auto& t : p.terms())
      for (std::size_t v = 0; v < k && free; ++v)
        if (t.mono[v]) free = false;
    if (free) kept.push_back(p.map_variables(r, back));
  }
  return Ideal(r, std::move(kept));
}

namespace {

// Ring with a fresh leading variable t under elimination(1), plus the map
// embedding the original variables.
std::pair<RingPtr, std::vector<std::size_t>> with_leading_t(const RingPtr& r) {
  RingPtr tr = r->with_prefix({fresh_name(*r, "t")}, MonomialOrder::elimination(1));
  std::vector<std::size_t> map(r->nvars());
  std::iota(map.begin(), map.end(), 1);
  return {tr, map};
}

Ideal drop_t(const RingPtr& tr, const std::vector<Polynomial>& gens, const RingPtr& r) {
  std::vector<Polynomial> gb = buchberger(gens, tr);
  std::vector<std::size_t> back(tr->nvars());
  for (std::size_t i = 1; i < tr->nvars(); ++i) back[i] = i - 1;
  std::vector<Polynomial> kept;
  for (const auto& p : gb) {
    if (p.degree_in(0) > 0) continue;
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      Monomial m(r->nvars(), t.mono.component());
      for (std::size_t i = 1; i < tr->nvars(); ++i) m.set(i - 1, t.mono[i]);
      ts.push_back({m, t.coeff});
    }
    kept.push_back(Polynomial(r, std::move(ts)));
  }
  return Ideal(r, std::move(kept));
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  const RingPtr& r = a.ring();
  if (a.is_unit()) return b.in_ring(r);
  if (b.is_unit()) return a;
  if (a.is_zero() || b.is_zero()) return Ideal(r);
  auto [tr, map] = with_leading_t(r);
  Polynomial t = Polynomial::variable(tr, 0);
  Polynomial one_minus_t = Polynomial::constant(tr, 1) - t;
  std::vector<Polynomial> g;
  for (const auto& p : a.basis()) g.push_back(t * p.map_variables(tr, map));
  for (const auto& p : b.basis()) g.push_back(one_minus_t * p.map_variables(tr, map));
  return drop_t(tr, g, r);
}

Ideal intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw Error(ErrorKind::InvalidArgument, "empty intersection");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

std::optional<Polynomial> divide_exact(const Polynomial& h, const Polynomial& g) {
  if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  const PrimeField& k = h.ring()->field();
  Coeff inv = k.inv(g.leading_coeff());
  Polynomial rest = h;
  std::vector<Term> q;
  while (!rest.is_zero()) {
    if (!g.leading_monomial().divides(rest.leading_monomial())) return std::nullopt;
    Monomial m = rest.leading_monomial() / g.leading_monomial();
    Coeff c = k.mul(rest.leading_coeff(), inv);
    q.push_back({m, c});
    rest = rest.minus_term_times(c, m, g);
  }
  return Polynomial(h.ring(), std::move(q));
}

Ideal quotient(const Ideal& a, const Polynomial& g) {
  const RingPtr& r = a.ring();
  if (g.is_zero()) return Ideal::unit(r);
  Polynomial gg = g.in_ring(r);
  if (a.contains(gg)) return Ideal::unit(r);
  Ideal meet = intersect(a, Ideal(r, {gg}));
  std::vector<Polynomial> out;
  for (const auto& h : meet.gens()) {
    auto q = divide_exact(h, gg);
    if (!q) throw Error(ErrorKind::InvalidArgument, "intersection element not divisible");
    out.push_back(*q);
  }
  return Ideal(r, std::move(out));
}

Ideal quotient(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  if (b.is_zero()) return Ideal::unit(a.ring());
  std::vector<Ideal> parts;
  for (const auto& g : b.basis()) parts.push_back(quotient(a, g));
  return intersect(parts);
}

Ideal saturate(const Ideal& a, const Polynomial& f) {
  const RingPtr& r = a.ring();
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "saturation by zero");
  if (a.is_unit()) return a;
  auto [tr, map] = with_leading_t(r);
  std::vector<Polynomial> g;
  for (const auto& p : a.basis()) g.push_back(p.map_variables(tr, map));
  g.push_back(Polynomial::constant(tr, 1) - Polynomial::variable(tr, 0) * f.in_ring(r).map_variables(tr, map));
  return drop_t(tr, g, r);
}

Ideal saturate(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  if (b.is_zero()) return Ideal::unit(a.ring());
  std::vector<Ideal> parts;
  for (const auto& g : b.basis()) parts.push_back(saturate(a, g));
  return intersect(parts);
}

std::size_t dimension(const Ideal& a) {
  if (a.is_unit()) throw Error(ErrorKind::InvalidArgument, "dimension of the unit ideal");
  const std::size_t n = a.ring()->nvars();
  Ideal g = a.canonical();
  std::vector<std::uint32_t> supports;
  for (const auto& p : g.gens()) {
    std::uint32_t s = 0;
    const Monomial& m = p.leading_monomial();
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) s |= 1u << i;
    supports.push_back(s);
  }
  std::size_t best = 0;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    std::size_t c = static_cast<std::size_t>(__builtin_popcount(set));
    if (c <= best) continue;
    bool independent = true;
    for (auto s : supports)
      if ((s & ~set) == 0) {
        independent = false;
        break;
      }
    if (independent) best = c;
  }
  return best;
}

bool radical_membership(const Polynomial& f, const Ideal& a) {
  const RingPtr& r = a.ring();
  auto [tr, map] = with_leading_t(r);
  std::vector<Polynomial> g;
  for (const auto& p : a.gens()) g.push_back(p.map_variables(tr, map));
  g.push_back(Polynomial::constant(tr, 1) - Polynomial::variable(tr, 0) * f.in_ring(r).map_variables(tr, map));
  auto gb = buchberger(g, tr->with_order(MonomialOrder::grevlex()));
  return gb.size() == 1 && gb[0].is_unit();
}

std::vector<std::vector<Polynomial>> syzygy_kernel(const PolyMatrix& m, const RingPtr& ring) {
  if (m.empty()) return {};
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<Polynomial> columns;
  for (std::size_t j = 0; j < cols; ++j) {
    Polynomial v(ring);
    for (std::size_t i = 0; i < rows; ++i)
      v += m[i][j].in_ring(ring) * Polynomial::basis_vector(ring, static_cast<std::uint32_t>(i + 1));
    columns.push_back(v);
  }
  // A zero column contributes the unit vector to the kernel; syzygies()
  // handles that through its tagged basis.
  std::vector<std::vector<Polynomial>> out;
  bool all_zero = std::all_of(columns.begin(), columns.end(), [](const Polynomial& c) { return c.is_zero(); });
  if (all_zero) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Polynomial> e(cols, Polynomial(ring));
      e[j] = Polynomial::constant(ring, 1);
      out.push_back(e);
    }
    return out;
  }
  // syzygies() needs a common ring for its generators; zero columns are
  // replaced by an explicit zero vector in component 1.
  std::vector<Polynomial> gens;
  std::vector<std::size_t> nonzero;
  for (std::size_t j = 0; j < cols; ++j) {
    if (columns[j].is_zero()) continue;
    nonzero.push_back(j);
    gens.push_back(columns[j]);
  }
  for (const auto& s : syzygies(gens)) {
    std::vector<Polynomial> v(cols, Polynomial(ring));
    for (std::size_t k = 0; k < nonzero.size(); ++k)
      v[nonzero[k]] = s.component(static_cast<std::uint32_t>(k + 1));
    out.push_back(v);
  }
  for (std::size_t j = 0; j < cols; ++j) {
    if (!columns[j].is_zero()) continue;
    std::vector<Polynomial> e(cols, Polynomial(ring));
    e[j] = Polynomial::constant(ring, 1);
    out.push_back(e);
  }
  return out;
}

}  // namespace fsk
