#pragma once

#include <optional>
#include <vector>

#include "fsk/field.hpp"

namespace fsk {

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Coeff& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Coeff> data_;
};

namespace linalg {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const PrimeField& F, Matrix& m);
std::size_t rank(const PrimeField& F, Matrix m);
/// Basis of {v : m v = 0}.
std::vector<std::vector<Coeff>> kernel(const PrimeField& F, Matrix m);
/// Some v with m v = b, if one exists.
std::optional<std::vector<Coeff>> solve(const PrimeField& F, const Matrix& m,
                                        const std::vector<Coeff>& b);

}  // namespace linalg
}  // namespace fsk
