// Copyright 2026 The Torelli Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense matrices over a Field with exact Gauss-Jordan elimination.
// Row-vector convention throughout: a linear map is a matrix whose rows are
// the images of the domain basis vectors.

#ifndef TORELLI_LINALG_H_
#define TORELLI_LINALG_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "torelli/field.h"

namespace torelli {

using Vec = std::vector<FieldElem>;

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  // Every row must have exactly `cols` entries.
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElem& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vec row(std::size_t r) const;
  void append_row(const Vec& v);

  Matrix transpose() const;
  // Rows of *this followed by rows of below.
  Matrix stacked(const Matrix& below) const;
  // Keeps the half-open column range [begin, end).
  Matrix column_slice(std::size_t begin, std::size_t end) const;
  // v * M
  Vec left_multiply(const Vec& v) const;
  bool is_zero() const;

  bool operator==(const Matrix& b) const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> data_;
};

struct Echelon {
  Matrix reduced;                      // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // leftmost-pivot order
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

// Basis of {v : v * M = 0}, one vector per free column of the RREF of M^T
// (leftmost pivoting), with a 1 in that free position.
std::vector<Vec> left_null_space(const Matrix& m);

// Some c with c * M = v, or nullopt.
std::optional<Vec> solve_left(const Matrix& m, const Vec& v);
bool in_row_span(const Matrix& m, const Vec& v);

}  // namespace torelli

#endif  // TORELLI_LINALG_H_
