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

#pragma once

#include <cstddef>
#include <vector>

#include "hcfam/rational.hpp"

namespace hcfam {

using QVector = std::vector<GaussianRational>;

/* Dense matrix over Q(i) with exact Gauss-Jordan elimination. Row/column
   counts are small everywhere in this project (rank computations, nullspaces
   for the center probe, fiber invariants). */
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, GaussianRational(0)) {}

  static QMatrix identity(size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  GaussianRational& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const GaussianRational& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  void append_row(const QVector& row);

  /* Reduced row echelon form in place; returns the pivot column indices. */
  std::vector<size_t> rref();

  size_t rank() const;
  GaussianRational det() const;  // square only

  /* Basis of the right nullspace, echelonized deterministically (one vector
     per free column, unit in that column). */
  std::vector<QVector> nullspace() const;

private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<GaussianRational> data_;
};

/* rank of the span of a list of vectors */
size_t span_rank(const std::vector<QVector>& vectors);

/* true when v lies in the span of the given vectors */
bool in_span(const std::vector<QVector>& vectors, const QVector& v);

/* true when the two lists span the same subspace */
bool same_span(const std::vector<QVector>& a, const std::vector<QVector>& b);

}  // namespace hcfam
