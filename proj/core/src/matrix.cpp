/*
   Copyright 2026 The polyshard-lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "polyshard/matrix.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace polyshard {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

void Matrix::set_block(std::size_t row, std::size_t col, const Matrix& block) {
  set_block(row, col, block, field_.one());
}

void Matrix::set_block(std::size_t row, std::size_t col, const Matrix& block, const Fp& scale) {
  if (row + block.rows_ > rows_ || col + block.cols_ > cols_) {
    throw std::out_of_range("block does not fit");
  }
  for (std::size_t r = 0; r < block.rows_; ++r) {
    for (std::size_t c = 0; c < block.cols_; ++c) {
      (*this)(row + r, col + c) = block(r, c) * scale;
    }
  }
}

Matrix Matrix::column_range(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw std::out_of_range("column range");
  Matrix out(field_, rows_, count);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  }
  return out;
}

Vector Matrix::operator*(std::span<const Fp> x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  Vector y(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r) {
    Fp acc = field_.zero();
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("vstack column mismatch");
  Matrix out(top.field_, top.rows_ + bottom.rows_, top.cols_);
  out.set_block(0, 0, top);
  out.set_block(top.rows_, 0, bottom);
  return out;
}

Matrix vandermonde(Field field, std::span<const Fp> xs, std::size_t degree) {
  Matrix m(field, xs.size(), degree + 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Fp power = field.one();
    for (std::size_t c = degree + 1; c-- > 0;) {
      m(i, c) = power;
      power *= xs[i];
    }
  }
  return m;
}

namespace {

/// In-place Gauss-Jordan elimination to reduced row echelon form over the
/// first `pivot_cols` columns. Returns the pivot column of each pivot row.
std::vector<std::size_t> reduce(Matrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const Fp inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Fp factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t matrix_rank(const Matrix& m) {
  Matrix work = m;
  return reduce(work, work.cols()).size();
}

std::vector<Vector> nullspace_basis(const Matrix& m) {
  Matrix work = m;
  const auto pivots = reduce(work, work.cols());
  const Field& f = m.field();

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_linear(const Matrix& m, std::span<const Fp> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side size mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t r = 0; r < m.rows(); ++r) aug(r, m.cols()) = b[r];

  const auto pivots = reduce(aug, m.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (!aug(r, m.cols()).is_zero()) return std::nullopt;
  }
  Vector x(m.cols(), m.field().zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

}  // namespace polyshard
