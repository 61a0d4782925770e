#include "fsk/compatible.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "fsk/error.hpp"
#include "fsk/primes.hpp"

namespace fsk {

namespace {

Ideal times(const Polynomial& u, const Ideal& I) {
  std::vector<Polynomial> g;
  for (const auto& h : I.gens()) g.push_back(u * h);
  return Ideal(I.ring(), g);
}

Ideal compact(const Ideal& I) { return Ideal(I.ring(), I.basis()); }

Polynomial determinant(std::vector<std::vector<Polynomial>> m, const RingPtr& r) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(r, 1);
  if (n == 1) return m[0][0];
  Polynomial det(r);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * determinant(std::move(minor), r);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

// Calls fn on each k-subset of {0..n-1} in lex order until it returns true.
template <class Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  for (;;) {
    if (fn(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// A Jacobian minor of P's basis of size height(P) that is not in P.
std::optional<Polynomial> jacobian_minor(const Ideal& P) {
  const RingPtr& r = P.ring();
  const auto& gens = P.basis();
  const std::size_t n = r->nvars();
  const std::size_t h = n - dimension(P);
  if (h == 0) return Polynomial::constant(r, 1);
  std::optional<Polynomial> found;
  for_each_subset(gens.size(), h, [&](const std::vector<std::size_t>& rows) {
    return for_each_subset(n, h, [&](const std::vector<std::size_t>& cols) {
      std::vector<std::vector<Polynomial>> m;
      for (auto i : rows) {
        std::vector<Polynomial> row;
        for (auto j : cols) row.push_back(gens[i].derivative(j));
        m.push_back(std::move(row));
      }
      Polynomial d = P.normal_form(determinant(std::move(m), r));
      if (d.is_zero()) return false;
      found = d;
      return true;
    });
  });
  return found;
}

std::vector<Polynomial> jacobian_generators(const RingPresentation& R) {
  std::vector<Polynomial> out;
  if (auto f = R.principal_generator()) {
    for (std::size_t v = 0; v < R.ring->nvars(); ++v) {
      Polynomial d = f->derivative(v);
      if (!d.is_zero()) out.push_back(d);
    }
    return out;
  }
  if (R.J.is_zero()) return {R.one()};
  throw Error(ErrorKind::Unsupported, "test elements need a principal defining ideal");
}

std::string key_of(const Ideal& I) {
  std::string k;
  for (const auto& s : I.canonical_strings()) k += s + ";";
  return k;
}

}  // namespace

Ideal phi_image(const Ideal& I, const FrobeniusDatum& d, const RingPresentation& R) {
  return frobenius_root(times(d.u, I) + bracket_power(R.J, d.e), d.e);
}

bool is_compatible(const Ideal& I, const FrobeniusDatum& d, const RingPresentation& R) {
  Ideal target = bracket_power(I, d.e) + bracket_power(R.J, d.e);
  for (const auto& g : I.gens())
    if (!target.contains(d.u * g)) return false;
  return true;
}

bool is_fixed(const Ideal& I, const FrobeniusDatum& d, const RingPresentation& R) {
  return phi_image(I, d, R) == I;
}

Ideal compatible_closure(const Ideal& I, const FrobeniusDatum& d, const RingPresentation& R,
                         unsigned cap) {
  Ideal K = compact(I + R.J);
  for (unsigned it = 0; it < cap; ++it) {
    Ideal next = compact(K + phi_image(K, d, R));
    if (K.contains(next)) return K;
    K = next;
  }
  throw Error(ErrorKind::IterationCap, "compatible closure did not stabilize");
}

Ideal test_ideal(const FrobeniusDatum& d, const RingPresentation& R,
                 const std::optional<Polynomial>& c) {
  auto mins = minimal_primes(R.J);
  Polynomial elem(R.ring);
  if (c) {
    for (const auto& P : mins)
      if (P.contains(*c))
        throw Error(ErrorKind::NoTestElement, c->to_string() + " lies in a minimal prime");
    elem = *c;
  } else {
    auto found = avoiding_combination(jacobian_generators(R), mins);
    if (!found) throw Error(ErrorKind::NoTestElement, "Jacobian ideal lies in a minimal prime");
    elem = *found;
  }
  return compatible_closure(Ideal(R.ring, {elem}), d, R);
}

Polynomial restricted_test_element(const Ideal& P, const FrobeniusDatum& d) {
  auto minor = jacobian_minor(P);
  if (!minor) throw Error(ErrorKind::NoTestElement, "no Jacobian minor outside " + P.to_string());
  Ideal Pp = bracket_power(P, 1);
  Ideal N = quotient(Pp + std::vector<Polynomial>{d.u}, quotient(Pp, P));
  auto n = avoiding_combination(N.basis(), {P});
  if (!n) throw Error(ErrorKind::NoTestElement, "datum degenerates along " + P.to_string());
  return P.normal_form(*minor * *n);
}

Ideal restricted_test_ideal(const Ideal& P, const FrobeniusDatum& d, unsigned cap) {
  RingPresentation RP(P.ring(), P);
  return compatible_closure(Ideal(P.ring(), {restricted_test_element(P, d)}), d, RP, cap);
}

Ideal splitting_prime(const FrobeniusDatum& d, const RingPresentation& R, const Ideal& at,
                      unsigned cap) {
  Ideal omega = compact(at + R.J);
  for (unsigned it = 0; it < cap; ++it) {
    Ideal next = compact(intersect(omega, phi_image(omega, d, R)));
    if (next.contains(omega)) {
      if (!is_compatible(omega, d, R))
        throw Error(ErrorKind::CertificateFailure, "splitting prime is not compatible");
      return omega;
    }
    omega = next;
  }
  throw Error(ErrorKind::IterationCap, "splitting prime iteration did not stabilize");
}

std::vector<std::pair<std::size_t, std::size_t>> CompatibleLattice::hasse() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::set<std::pair<std::size_t, std::size_t>> all(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) {
    bool covered = true;
    for (std::size_t m = 0; m < ideals.size() && covered; ++m)
      if (all.count({a, m}) && all.count({m, b})) covered = false;
    if (covered) out.push_back({a, b});
  }
  return out;
}

CompatibleLattice enumerate_compatible(const FrobeniusDatum& d, const RingPresentation& R,
                                       const EnumerateOptions& opts) {
  if (!fedder_is_fpure(R, R.irrelevant()))
    throw Error(ErrorKind::InvalidArgument, "enumeration requires an F-pure ring");

  auto decompose = [&](const Ideal& I) {
    for (const auto& [target, hint] : opts.hints)
      if (target == I) return minimal_primes(I, hint);
    return minimal_primes(I);
  };

  CompatibleLattice L;
  std::set<std::string> seen;
  std::deque<Ideal> queue;
  auto add = [&](const Ideal& P) {
    Ideal c = P.canonical();
    if (!seen.insert(key_of(c)).second) return;
    if (!is_compatible(c, d, R))
      throw Error(ErrorKind::CertificateFailure, "recursion produced non-compatible " + c.to_string());
    if (L.primes.size() >= opts.prime_cap)
      throw Error(ErrorKind::BoundExceeded, "compatible prime cap exceeded");
    L.primes.push_back(c);
    queue.push_back(c);
  };

  L.minimal_primes = decompose(R.J);
  for (const auto& P : L.minimal_primes) add(P);

  std::size_t summed = 0;  // primes [0, summed) have all pairwise sums done
  for (;;) {
    while (!queue.empty()) {
      Ideal P = queue.front();
      queue.pop_front();
      Ideal tau = restricted_test_ideal(P, d, opts.closure_cap);
      if (tau.is_unit()) continue;
      for (const auto& Q : decompose(tau)) add(Q);
    }
    if (summed == L.primes.size()) break;
    const std::size_t upto = L.primes.size();
    for (std::size_t j = summed; j < upto; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        Ideal s = L.primes[i] + L.primes[j];
        if (s.is_unit()) continue;
        for (const auto& Q : decompose(s)) add(Q);
      }
    summed = upto;
  }

  auto order_key = [](const Ideal& I) {
    return std::make_pair(I.is_unit() ? 0 : -static_cast<long>(dimension(I)), I.canonical_strings());
  };
  auto by_key = [&](const Ideal& a, const Ideal& b) { return order_key(a) < order_key(b); };
  std::sort(L.primes.begin(), L.primes.end(), by_key);

  // Close under intersection.
  std::set<std::string> have;
  for (const auto& P : L.primes) {
    have.insert(key_of(P));
    L.ideals.push_back(P);
  }
  std::vector<Ideal> frontier = L.primes;
  while (!frontier.empty()) {
    std::vector<Ideal> fresh;
    for (const auto& a : frontier)
      for (const auto& b : L.primes) {
        Ideal c = intersect(a, b).canonical();
        if (have.insert(key_of(c)).second) {
          fresh.push_back(c);
          L.ideals.push_back(c);
        }
      }
    frontier = std::move(fresh);
  }
  std::sort(L.ideals.begin(), L.ideals.end(), by_key);

  for (std::size_t a = 0; a < L.ideals.size(); ++a)
    for (std::size_t b = 0; b < L.ideals.size(); ++b)
      if (a != b && L.ideals[b].contains(L.ideals[a]) && !L.ideals[a].contains(L.ideals[b]))
        L.edges.push_back({a, b});
  for (const auto& I : L.ideals)
    for (const auto& g : I.gens())
      L.max_generator_degree = std::max<std::uint64_t>(L.max_generator_degree, g.degree());
  return L;
}

}  // namespace fsk
