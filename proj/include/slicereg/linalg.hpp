#pragma once

#include <cstddef>
#include <vector>

#include "slicereg/rational.hpp"

namespace slicereg {

/// Dense row-major matrix.
template <class S>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  S& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<S> apply(const std::vector<S>& v) const {
    std::vector<S> out(rows_, S(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    }
    return out;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<S> a_;
};

using RatVector = std::vector<Rat>;

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(Matrix<Rat>& m);

std::size_t rank(Matrix<Rat> m);

/// Basis of {v : Mv = 0}, one vector per free column, with that column's entry equal to 1.
/// Empty iff the kernel is trivial.
std::vector<RatVector> nullspace(Matrix<Rat> m);

}  // namespace slicereg
