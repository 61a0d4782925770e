#include "fsk/upoly.hpp"

#include <algorithm>
#include <random>

#include "fsk/error.hpp"

namespace fsk::upoly {

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly add(const PrimeField& F, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

UPoly sub(const PrimeField& F, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

UPoly mul(const PrimeField& F, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> divmod(const PrimeField& F, const UPoly& a, const UPoly& b) {
  if (b.empty()) throw Error(ErrorKind::DivisionByZero, "univariate division by zero");
  UPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  UPoly q(r.size() - b.size() + 1, 0);
  Coeff lead_inv = F.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    Coeff c = F.mul(r[k + b.size() - 1], lead_inv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = F.sub(r[k + j], F.mul(c, b[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

UPoly mod(const PrimeField& F, const UPoly& a, const UPoly& b) { return divmod(F, a, b).second; }

UPoly monic(const PrimeField& F, const UPoly& a) {
  if (a.empty()) return a;
  Coeff inv = F.inv(a.back());
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], inv);
  return r;
}

UPoly gcd(const PrimeField& F, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

UPoly derivative(const PrimeField& F, const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], F.reduce(static_cast<std::int64_t>(i)));
  trim(r);
  return r;
}

UPoly powmod(const PrimeField& F, UPoly a, std::uint64_t e, const UPoly& m) {
  UPoly result{1};
  result = mod(F, result, m);
  a = mod(F, a, m);
  while (e > 0) {
    if (e & 1) result = mod(F, mul(F, result, a), m);
    e >>= 1;
    if (e) a = mod(F, mul(F, a, a), m);
  }
  return result;
}

namespace {

const UPoly kX{0, 1};

// p-th root of a polynomial whose derivative vanishes.
UPoly pth_root(const PrimeField& F, const UPoly& a) {
  const std::size_t p = F.characteristic();
  UPoly r;
  for (std::size_t i = 0; i < a.size(); i += p) r.push_back(a[i]);
  trim(r);
  return r;
}

std::vector<std::pair<UPoly, unsigned>> squarefree(const PrimeField& F, const UPoly& f) {
  std::vector<std::pair<UPoly, unsigned>> out;
  UPoly c = gcd(F, f, derivative(F, f));
  UPoly w = divmod(F, f, c).first;
  unsigned i = 1;
  while (w.size() > 1) {
    UPoly y = gcd(F, w, c);
    UPoly fac = divmod(F, w, y).first;
    if (fac.size() > 1) out.push_back({monic(F, fac), i});
    w = y;
    c = divmod(F, c, y).first;
    ++i;
  }
  if (c.size() > 1) {
    const unsigned p = F.characteristic();
    for (auto& [g, j] : squarefree(F, pth_root(F, c))) out.push_back({g, j * p});
  }
  return out;
}

std::vector<std::pair<UPoly, unsigned>> distinct_degree(const PrimeField& F, UPoly g) {
  std::vector<std::pair<UPoly, unsigned>> out;
  UPoly h = kX;
  unsigned d = 0;
  while (degree(g) >= 2 * static_cast<long>(d + 1)) {
    ++d;
    h = powmod(F, h, F.characteristic(), g);
    UPoly fac = gcd(F, g, sub(F, h, kX));
    if (fac.size() > 1) {
      out.push_back({fac, d});
      g = divmod(F, g, fac).first;
      h = mod(F, h, g);
    }
  }
  if (g.size() > 1) out.push_back({monic(F, g), static_cast<unsigned>(degree(g))});
  return out;
}

// Split g, a product of distinct irreducibles of degree d.
void equal_degree(const PrimeField& F, const UPoly& g, unsigned d, std::mt19937_64& rng,
                  std::vector<UPoly>& out) {
  if (degree(g) == static_cast<long>(d)) {
    out.push_back(monic(F, g));
    return;
  }
  const Coeff p = F.characteristic();
  std::uniform_int_distribution<Coeff> coef(0, p - 1);
  for (;;) {
    UPoly a(static_cast<std::size_t>(degree(g)));
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (a.size() <= 1) continue;
    UPoly b;
    if (p == 2) {
      // Trace F_{2^d} -> F_2.
      UPoly t = a, s = a;
      for (unsigned i = 1; i < d; ++i) {
        t = mod(F, mul(F, t, t), g);
        s = add(F, s, t);
      }
      b = s;
    } else {
      // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2).
      UPoly t = mod(F, a, g), norm = t;
      for (unsigned i = 1; i < d; ++i) {
        t = powmod(F, t, p, g);
        norm = mod(F, mul(F, norm, t), g);
      }
      b = sub(F, powmod(F, norm, (p - 1) / 2, g), UPoly{1});
    }
    UPoly fac = gcd(F, g, b);
    if (fac.size() > 1 && degree(fac) < degree(g)) {
      equal_degree(F, fac, d, rng, out);
      equal_degree(F, divmod(F, g, fac).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<UPoly, unsigned>> factor(const PrimeField& F, const UPoly& a) {
  UPoly f = a;
  trim(f);
  if (f.empty()) throw Error(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
  std::vector<std::pair<UPoly, unsigned>> out;
  std::mt19937_64 rng(0x5eed);
  for (auto& [g, mult] : squarefree(F, monic(F, f))) {
    for (auto& [h, d] : distinct_degree(F, g)) {
      std::vector<UPoly> pieces;
      equal_degree(F, h, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({piece, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return std::lexicographical_compare(x.first.rbegin(), x.first.rend(), y.first.rbegin(),
                                        y.first.rend());
  });
  return out;
}

bool is_irreducible(const PrimeField& F, const UPoly& a) {
  auto f = factor(F, a);
  return f.size() == 1 && f[0].second == 1;
}

std::vector<Coeff> roots(const PrimeField& F, const UPoly& a) {
  std::vector<Coeff> out;
  for (auto& [g, m] : factor(F, a))
    if (g.size() == 2) out.push_back(F.neg(g[0]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fsk::upoly
