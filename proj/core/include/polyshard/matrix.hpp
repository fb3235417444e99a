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

#ifndef POLYSHARD_MATRIX_HPP
#define POLYSHARD_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polyshard/field.hpp"

namespace polyshard {

using Vector = std::vector<Fp>;

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Fp& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Fp& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Fp> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  const std::vector<Fp>& entries() const noexcept { return entries_; }

  /// Copies `block` so that its (0,0) lands at (row, col); `scale` multiplies
  /// every copied entry.
  void set_block(std::size_t row, std::size_t col, const Matrix& block);
  void set_block(std::size_t row, std::size_t col, const Matrix& block, const Fp& scale);

  /// Columns [first, first + count).
  Matrix column_range(std::size_t first, std::size_t count) const;

  Vector operator*(std::span<const Fp> x) const;

  /// Rows of `top` followed by rows of `bottom`; column counts must match.
  static Matrix vstack(const Matrix& top, const Matrix& bottom);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Fp> entries_;
};

/// |xs| x (degree+1) Vandermonde matrix, row i = (x_i^D, ..., x_i, 1).
Matrix vandermonde(Field field, std::span<const Fp> xs, std::size_t degree);

std::size_t matrix_rank(const Matrix& m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column of the
/// reduced row echelon form. Empty iff m has full column rank.
std::vector<Vector> nullspace_basis(const Matrix& m);

/// Some x with m x = b, or nothing if the system is inconsistent. Free
/// variables are set to zero.
std::optional<Vector> solve_linear(const Matrix& m, std::span<const Fp> b);

}  // namespace polyshard

#endif  // POLYSHARD_MATRIX_HPP
