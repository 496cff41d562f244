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

#include "torelli/linalg.h"

#include <utility>

#include "torelli/errors.h"

namespace torelli {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      data_(rows * cols, field_.zero()) {}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(std::move(field), 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::append_row(const Vec& v) {
  if (v.size() != cols_) {
    throw Error(ErrorCode::kInvalidArgument, "row length does not match column count");
  }
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (below.cols_ != cols_) {
    throw Error(ErrorCode::kInvalidArgument, "stacking matrices of different widths");
  }
  Matrix out(*this);
  out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
  out.rows_ += below.rows_;
  return out;
}

Matrix Matrix::column_slice(std::size_t begin, std::size_t end) const {
  Matrix out(field_, rows_, end - begin);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = begin; c < end; ++c) out.at(r, c - begin) = at(r, c);
  }
  return out;
}

Vec Matrix::left_multiply(const Vec& v) const {
  if (v.size() != rows_) {
    throw Error(ErrorCode::kInvalidArgument, "vector length does not match row count");
  }
  Vec out(cols_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < cols_; ++c) out[c] += v[r] * at(r, c);
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool Matrix::operator==(const Matrix& b) const {
  return field_ == b.field_ && rows_ == b.rows_ && cols_ == b.cols_ && data_ == b.data_;
}

Echelon row_reduce(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t sel = lead_row;
    while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(lead_row, j));
    }
    const FieldElem inv = m.at(lead_row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m.at(r, c).is_zero()) continue;
      const FieldElem factor = m.at(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        m.at(r, j) -= factor * m.at(lead_row, j);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_cols.size(); }

std::vector<Vec> left_null_space(const Matrix& m) {
  const Echelon e = row_reduce(m.transpose());
  const std::size_t n = m.rows();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivot_cols) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, m.field().zero());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
      v[e.pivot_cols[i]] = -e.reduced.at(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve_left(const Matrix& m, const Vec& v) {
  if (v.size() != m.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "vector length does not match column count");
  }
  // M^T c = v^T on the augmented system [M^T | v].
  Matrix aug(m.field(), m.cols(), m.rows() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(c, r) = m.at(r, c);
  }
  for (std::size_t c = 0; c < m.cols(); ++c) aug.at(c, m.rows()) = v[c];
  const Echelon e = row_reduce(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.rows()) return std::nullopt;
  Vec sol(m.rows(), m.field().zero());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
    sol[e.pivot_cols[i]] = e.reduced.at(i, m.rows());
  }
  return sol;
}

bool in_row_span(const Matrix& m, const Vec& v) {
  return rank(m.stacked(Matrix::from_rows(m.field(), m.cols(), {v}))) == rank(m);
}

}  // namespace torelli
