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

#include "rankcodes/linalg.h"

#include <algorithm>

#include "rankcodes/error.h"

namespace rankcodes {

Matrix Matrix::from_rows(const std::vector<Vec>& rows, size_t cols) {
  Matrix m(0, cols);
  for (const Vec& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Element> v) {
  if (v.size() != cols_) throw Error(ErrorKind::kLengthMismatch, "row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

RowEchelon rref(const FieldTower& t, Matrix m) {
  const size_t rows = m.rows(), cols = m.cols();
  std::vector<size_t> pivots;
  size_t lead = 0;
  for (size_t col = 0; col < cols && lead < rows; ++col) {
    size_t piv = lead;
    while (piv < rows && m(piv, col) == t.zero()) ++piv;
    if (piv == rows) continue;
    if (piv != lead) {
      for (size_t k = 0; k < cols; ++k) std::swap(m(piv, k), m(lead, k));
    }
    const Element s = t.inv(m(lead, col));
    for (size_t k = col; k < cols; ++k) m(lead, k) = t.mul(m(lead, k), s);
    for (size_t i = 0; i < rows; ++i) {
      if (i == lead || m(i, col) == t.zero()) continue;
      const Element f = m(i, col);
      for (size_t k = col; k < cols; ++k) m(i, k) = t.sub(m(i, k), t.mul(f, m(lead, k)));
    }
    pivots.push_back(col);
    ++lead;
  }
  Matrix reduced(0, cols);
  for (size_t i = 0; i < lead; ++i) reduced.append_row(m.row(i));
  return {std::move(reduced), std::move(pivots)};
}

size_t rank(const FieldTower& t, const Matrix& m) { return rref(t, m).pivots.size(); }

Matrix right_kernel(const FieldTower& t, const Matrix& m) {
  const RowEchelon e = rref(t, m);
  const size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : e.pivots) is_pivot[c] = true;
  Matrix out(0, cols);
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, t.zero());
    v[f] = t.one();
    for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = t.neg(e.reduced(i, f));
    out.append_row(v);
  }
  return out;
}

Matrix kernel_over_subfield(const FieldTower& t, const Matrix& m, uint32_t d,
                            uint32_t domain_degree) {
  if (!t.has_subfield(d)) {
    throw Error(ErrorKind::kUndeclaredSubfield, "kernel over an undeclared subfield");
  }
  uint32_t big = domain_degree;
  if (big == 0) {
    const uint32_t top = t.N() / t.e();
    for (uint32_t cand = d; cand <= top; cand += d) {
      if (!t.has_subfield(cand)) continue;
      bool fits = true;
      for (size_t i = 0; i < m.rows() && fits; ++i) {
        for (Element x : m.row(i)) {
          if (!t.in_subfield(x, cand)) {
            fits = false;
            break;
          }
        }
      }
      if (fits) {
        big = cand;
        break;
      }
    }
  }
  if (big % d != 0 || !t.has_subfield(big)) {
    throw Error(ErrorKind::kUndeclaredSubfield, "domain field does not contain the subfield");
  }
  const Matrix base = right_kernel(t, m);
  if (big == d) return base;
  const SubfieldCoordinates coords(t, big, d);
  Matrix out(0, m.cols());
  for (size_t i = 0; i < base.rows(); ++i) {
    for (Element w : coords.basis()) {
      Vec v(m.cols());
      for (size_t j = 0; j < m.cols(); ++j) v[j] = t.mul(w, base(i, j));
      out.append_row(v);
    }
  }
  return out;
}

bool in_row_space(const FieldTower& t, const RowEchelon& e, std::span<const Element> v) {
  Vec w(v.begin(), v.end());
  for (size_t i = 0; i < e.pivots.size(); ++i) {
    const Element f = w[e.pivots[i]];
    if (f == t.zero()) continue;
    for (size_t k = 0; k < w.size(); ++k) w[k] = t.sub(w[k], t.mul(f, e.reduced(i, k)));
  }
  return std::all_of(w.begin(), w.end(), [&](Element x) { return x == t.zero(); });
}

Matrix multiply(const FieldTower& t, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::kLengthMismatch, "matrix shapes");
  Matrix out(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t k = 0; k < a.cols(); ++k) {
      const Element x = a(i, k);
      if (x == t.zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j) out(i, j) = t.add(out(i, j), t.mul(x, b(k, j)));
    }
  }
  return out;
}

std::optional<Matrix> inverse(const FieldTower& t, const Matrix& a) {
  const size_t n = a.rows();
  if (a.cols() != n) return std::nullopt;
  Matrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = t.one();
  }
  const RowEchelon e = rref(t, aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix out(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  }
  return out;
}

Matrix stack(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (size_t i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
  return out;
}

Matrix span_sum(const FieldTower& t, const Matrix& a, const Matrix& b) {
  return rref(t, stack(a, b)).reduced;
}

Matrix span_intersection(const FieldTower& t, const Matrix& a, const Matrix& b) {
  const Matrix perp = stack(right_kernel(t, a), right_kernel(t, b));
  return rref(t, right_kernel(t, perp)).reduced;
}

bool same_span(const FieldTower& t, const Matrix& a, const Matrix& b) {
  return rref(t, a).reduced == rref(t, b).reduced;
}

}  // namespace rankcodes
