#include "fsk/linalg.hpp"

namespace fsk::linalg {

std::vector<std::size_t> rref(const PrimeField& F, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    Coeff inv = F.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = F.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Coeff f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = F.sub(m(r, c), F.mul(f, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const PrimeField& F, Matrix m) { return rref(F, m).size(); }

std::vector<std::vector<Coeff>> kernel(const PrimeField& F, Matrix m) {
  auto pivots = rref(F, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Coeff>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m(r, free));
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Coeff>> solve(const PrimeField& F, const Matrix& m,
                                        const std::vector<Coeff>& b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto pivots = rref(F, aug);
  std::vector<Coeff> x(m.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m.cols()) return std::nullopt;
    x[pivots[r]] = aug(r, m.cols());
  }
  return x;
}

}  // namespace fsk::linalg
