// Copyright 2026 The rankcodes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact Gaussian elimination over the ambient field of a tower.

#ifndef RANKCODES_LINALG_H_
#define RANKCODES_LINALG_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rankcodes/gf.h"

namespace rankcodes {

using Vec = std::vector<Element>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix from_rows(const std::vector<Vec>& rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Element& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  Element operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Element> row(size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  Vec row_vec(size_t i) const { return Vec(row(i).begin(), row(i).end()); }
  void append_row(std::span<const Element> v);
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Element> data_;
};

struct RowEchelon {
  Matrix reduced;  // nonzero rows only, leading ones
  std::vector<size_t> pivots;
};

RowEchelon rref(const FieldTower& t, Matrix m);
size_t rank(const FieldTower& t, const Matrix& m);
// Basis (as rows) of { v : M v = 0 }.
Matrix right_kernel(const FieldTower& t, const Matrix& m);
// Basis over GF(q^d) of the right kernel restricted to GF(q^D)^cols, where D is
// domain_degree, or the least subfield degree holding every entry when 0.
Matrix kernel_over_subfield(const FieldTower& t, const Matrix& m, uint32_t d,
                            uint32_t domain_degree = 0);
bool in_row_space(const FieldTower& t, const RowEchelon& e, std::span<const Element> v);
Matrix multiply(const FieldTower& t, const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const FieldTower& t, const Matrix& a);
Matrix stack(const Matrix& a, const Matrix& b);
// Canonical bases of subspace sum and intersection, as RREF rows.
Matrix span_sum(const FieldTower& t, const Matrix& a, const Matrix& b);
Matrix span_intersection(const FieldTower& t, const Matrix& a, const Matrix& b);
bool same_span(const FieldTower& t, const Matrix& a, const Matrix& b);

}  // namespace rankcodes

#endif  // RANKCODES_LINALG_H_
