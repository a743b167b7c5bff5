/*
   Copyright 2026 The hcfam authors

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

#include "hcfam/linalg.hpp"

#include <cassert>

namespace hcfam {

QMatrix QMatrix::identity(size_t n) {
  QMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  QMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == m.cols_);
    for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

void QMatrix::append_row(const QVector& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  assert(row.size() == cols_);
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<size_t> QMatrix::rref() {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t p = r;
    while (p < rows_ && at(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
    GaussianRational inv = at(r, c).inv();
    for (size_t j = c; j < cols_; ++j) at(r, j) *= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c).is_zero()) continue;
      GaussianRational f = at(i, c);
      for (size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t QMatrix::rank() const {
  QMatrix copy(*this);
  return copy.rref().size();
}

GaussianRational QMatrix::det() const {
  assert(rows_ == cols_);
  QMatrix m(*this);
  GaussianRational d(1);
  for (size_t c = 0; c < m.cols_; ++c) {
    size_t p = c;
    while (p < m.rows_ && m.at(p, c).is_zero()) ++p;
    if (p == m.rows_) return 0;
    if (p != c) {
      for (size_t j = 0; j < m.cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    GaussianRational inv = m.at(c, c).inv();
    for (size_t i = c + 1; i < m.rows_; ++i) {
      if (m.at(i, c).is_zero()) continue;
      GaussianRational f = m.at(i, c) * inv;
      for (size_t j = c; j < m.cols_; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

std::vector<QVector> QMatrix::nullspace() const {
  QMatrix m(*this);
  std::vector<size_t> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivots) is_pivot[c] = true;

  std::vector<QVector> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols_, GaussianRational(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

size_t span_rank(const std::vector<QVector>& vectors) {
  if (vectors.empty()) return 0;
  return QMatrix::from_rows(vectors).rank();
}

bool in_span(const std::vector<QVector>& vectors, const QVector& v) {
  QMatrix m = QMatrix::from_rows(vectors);
  size_t base = m.rank();
  if (vectors.empty()) m = QMatrix(0, v.size());
  m.append_row(v);
  return m.rank() == base;
}

bool same_span(const std::vector<QVector>& a, const std::vector<QVector>& b) {
  size_t ra = span_rank(a), rb = span_rank(b);
  if (ra != rb) return false;
  std::vector<QVector> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return span_rank(all) == ra;
}

}  // namespace hcfam
