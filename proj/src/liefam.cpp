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

#include "hcfam/liefam.hpp"

#include <algorithm>
#include <cassert>

namespace hcfam {

namespace {

std::vector<LaurentPoly> zero_coords(unsigned rank) {
  return std::vector<LaurentPoly>(rank);
}

bool coords_zero(const std::vector<LaurentPoly>& v) {
  return std::all_of(v.begin(), v.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

std::vector<std::string> default_names(unsigned rank) {
  std::vector<std::string> names;
  names.reserve(rank);
  for (unsigned i = 0; i < rank; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

/* [w, e_k] for a coordinate vector w, expanded through the table. */
std::vector<LaurentPoly> bracket_coords_with_basis(const GradedFamily& f,
                                                   const std::vector<LaurentPoly>& w, unsigned k) {
  auto out = zero_coords(f.rank());
  for (unsigned p = 0; p < f.rank(); ++p) {
    if (w[p].is_zero()) continue;
    auto pk = f.bracket_coords(p, k);
    for (unsigned q = 0; q < f.rank(); ++q) out[q] += w[p] * pk[q];
  }
  return out;
}

}  // namespace

GradedFamily::GradedFamily(unsigned rank, BaseRing base, std::vector<int> weights,
                           unsigned h_index, BracketTable table,
                           std::vector<std::string> basis_names)
    : rank_(rank),
      base_(base),
      weights_(std::move(weights)),
      h_index_(h_index),
      table_(std::move(table)),
      names_(std::move(basis_names)) {
  if (names_.empty()) names_ = default_names(rank_);
  // drop explicit zero entries so equality is table-normal-form equality
  for (auto it = table_.begin(); it != table_.end();) {
    if (it->second.size() == rank_ && coords_zero(it->second))
      it = table_.erase(it);
    else
      ++it;
  }
  validate();
}

std::vector<LaurentPoly> GradedFamily::bracket_coords(unsigned i, unsigned j) const {
  if (i == j) return zero_coords(rank_);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = table_.find({i, j});
  if (it == table_.end()) return zero_coords(rank_);
  if (!flip) return it->second;
  auto out = it->second;
  for (auto& c : out) c = -c;
  return out;
}

void GradedFamily::validate() const {
  if (weights_.size() != rank_)
    throw ValidationError("shape", {}, "weight vector length differs from rank");
  if (h_index_ >= rank_) throw ValidationError("shape", {h_index_}, "h_index out of range");
  if (names_.size() != rank_)
    throw ValidationError("shape", {}, "basis name list length differs from rank");
  for (const auto& [key, coords] : table_) {
    auto [i, j] = key;
    if (i >= j)
      throw ValidationError("antisymmetry", {i, j}, "bracket table keys must satisfy i < j");
    if (j >= rank_) throw ValidationError("shape", {i, j}, "bracket table index out of range");
    if (coords.size() != rank_)
      throw ValidationError("shape", {i, j}, "bracket coordinate vector has wrong length");
    if (base_ == BaseRing::Affine)
      for (unsigned q = 0; q < rank_; ++q)
        if (!coords[q].is_polynomial())
          throw ValidationError("shape", {i, j, q}, "negative exponent in affine family");
  }

  if (weights_[h_index_] != 0)
    throw ValidationError("h-compatibility", {h_index_}, "designated H must have weight 0");

  // weight additivity: [g_a, g_b] lies in the (a+b)-graded piece
  for (const auto& [key, coords] : table_) {
    auto [i, j] = key;
    for (unsigned q = 0; q < rank_; ++q)
      if (!coords[q].is_zero() && weights_[q] != weights_[i] + weights_[j])
        throw ValidationError("weight-additivity", {i, j, q},
                              "bracket entry outside the graded piece of weight " +
                                  std::to_string(weights_[i] + weights_[j]));
  }

  // H-compatibility: [H, e_i] = w_i e_i
  for (unsigned i = 0; i < rank_; ++i) {
    auto hi = bracket_coords(h_index_, i);
    for (unsigned q = 0; q < rank_; ++q) {
      LaurentPoly expected = (q == i) ? LaurentPoly(GaussianRational(weights_[i])) : LaurentPoly();
      if (hi[q] != expected)
        throw ValidationError("h-compatibility", {h_index_, i},
                              "adjoint action of H is not diagonal with the declared weights");
    }
  }

  // Jacobi: [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0
  for (unsigned i = 0; i < rank_; ++i)
    for (unsigned j = i + 1; j < rank_; ++j)
      for (unsigned k = j + 1; k < rank_; ++k) {
        auto s1 = bracket_coords_with_basis(*this, bracket_coords(i, j), k);
        auto s2 = bracket_coords_with_basis(*this, bracket_coords(j, k), i);
        auto s3 = bracket_coords_with_basis(*this, bracket_coords(k, i), j);
        for (unsigned q = 0; q < rank_; ++q) s1[q] += s2[q] + s3[q];
        if (!coords_zero(s1)) throw ValidationError("jacobi", {i, j, k}, "Jacobi identity fails");
      }
}

FamilyPtr new_family(unsigned rank, BaseRing base, std::vector<int> weights, unsigned h_index,
                     BracketTable table, std::vector<std::string> basis_names) {
  return std::make_shared<const GradedFamily>(rank, base, std::move(weights), h_index,
                                              std::move(table), std::move(basis_names));
}

FamilyElement::FamilyElement(FamilyPtr family, std::vector<LaurentPoly> coords)
    : fam_(std::move(family)), coords_(std::move(coords)) {
  if (coords_.size() != fam_->rank())
    throw DomainError("Shape", "coordinate vector length differs from family rank");
  if (fam_->base() == BaseRing::Affine)
    for (const auto& c : coords_)
      if (!c.is_polynomial())
        throw DomainError("NegativeExponent", "affine element with negative exponent");
}

FamilyElement FamilyElement::basis(const FamilyPtr& family, unsigned i) {
  auto coords = zero_coords(family->rank());
  coords.at(i) = LaurentPoly(1);
  return {family, std::move(coords)};
}

FamilyElement FamilyElement::zero(const FamilyPtr& family) {
  return {family, zero_coords(family->rank())};
}

bool FamilyElement::is_zero() const { return coords_zero(coords_); }

bool FamilyElement::homogeneous_of_weight(int w) const {
  for (unsigned i = 0; i < coords_.size(); ++i)
    if (!coords_[i].is_zero() && fam_->weights()[i] != w) return false;
  return true;
}

namespace {
void require_same_family(const FamilyElement& a, const FamilyElement& b) {
  if (*a.family() != *b.family()) throw FamilyMismatch();
}
}  // namespace

FamilyElement FamilyElement::operator-() const {
  FamilyElement v(*this);
  for (auto& c : v.coords_) c = -c;
  return v;
}

FamilyElement& FamilyElement::operator+=(const FamilyElement& o) {
  require_same_family(*this, o);
  for (unsigned i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FamilyElement& FamilyElement::operator-=(const FamilyElement& o) {
  require_same_family(*this, o);
  for (unsigned i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FamilyElement operator*(const LaurentPoly& s, FamilyElement v) {
  for (auto& c : v.coords_) c = s * c;
  if (v.fam_->base() == BaseRing::Affine)
    for (const auto& c : v.coords_)
      if (!c.is_polynomial())
        throw DomainError("NegativeExponent", "affine element with negative exponent");
  return v;
}

FamilyElement operator*(const GaussianRational& s, FamilyElement v) {
  return LaurentPoly(s) * std::move(v);
}

bool operator==(const FamilyElement& a, const FamilyElement& b) {
  return *a.family() == *b.family() && a.coords() == b.coords();
}

FamilyElement bracket(const FamilyElement& u, const FamilyElement& v) {
  require_same_family(u, v);
  const auto& f = *u.family();
  auto out = zero_coords(f.rank());
  for (unsigned p = 0; p < f.rank(); ++p) {
    if (u.coords()[p].is_zero()) continue;
    for (unsigned q = 0; q < f.rank(); ++q) {
      if (v.coords()[q].is_zero() || p == q) continue;
      auto pq = f.bracket_coords(p, q);
      LaurentPoly s = u.coords()[p] * v.coords()[q];
      for (unsigned r = 0; r < f.rank(); ++r) out[r] += s * pq[r];
    }
  }
  return {u.family(), std::move(out)};
}

GroupElement::GroupElement(GaussianRational z) : z_(std::move(z)) {
  if (z_.is_zero()) throw DomainError("NotInvertible", "group element with z = 0");
}

FamilyElement so2_act(const GroupElement& g, const FamilyElement& v) {
  const auto& f = *v.family();
  auto coords = v.coords();
  for (unsigned i = 0; i < coords.size(); ++i)
    coords[i] = g.z().pow(f.weights()[i]) * coords[i];
  return {v.family(), std::move(coords)};
}

FamilyPtr localize(const FamilyPtr& f) {
  if (f->base() == BaseRing::Punctured)
    throw DomainError("AlreadyLocalized", "family is already over the punctured line");
  return new_family(f->rank(), BaseRing::Punctured, f->weights(), f->h_index(), f->table(),
                    f->basis_names());
}

namespace {

/* determinant of a small matrix over the Laurent ring, cofactor expansion */
LaurentPoly laurent_det(const std::vector<std::vector<LaurentPoly>>& m) {
  size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m[0][0];
  LaurentPoly det;
  int sign = 1;
  for (size_t i = 0; i < n; ++i) {
    if (!m[i][0].is_zero()) {
      std::vector<std::vector<LaurentPoly>> minor;
      minor.reserve(n - 1);
      for (size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<LaurentPoly> row(m[r].begin() + 1, m[r].end());
        minor.push_back(std::move(row));
      }
      LaurentPoly term = m[i][0] * laurent_det(minor);
      det += sign > 0 ? term : -term;
    }
    sign = -sign;
  }
  return det;
}

}  // namespace

FamilyPtr change_basis(const GradedFamily& f, const std::vector<std::vector<LaurentPoly>>& M,
                       std::vector<int> new_weights, unsigned new_h_index,
                       std::vector<std::string> basis_names) {
  unsigned n = f.rank();
  if (M.size() != n) throw DomainError("Shape", "base-change matrix has wrong row count");
  for (const auto& row : M)
    if (row.size() != n) throw DomainError("Shape", "base-change matrix has wrong column count");

  LaurentPoly det = laurent_det(M);
  if (!det.is_unit() || (f.base() == BaseRing::Affine && det.as_monomial()->second != 0))
    throw DomainError("NotInvertible", "base change is not invertible over the base ring");

  // inverse via adjugate / det
  LaurentPoly det_inv = det.unit_inverse();
  std::vector<std::vector<LaurentPoly>> inv(n, std::vector<LaurentPoly>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      std::vector<std::vector<LaurentPoly>> minor;
      minor.reserve(n - 1);
      for (unsigned r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<LaurentPoly> row;
        row.reserve(n - 1);
        for (unsigned c = 0; c < n; ++c)
          if (c != i) row.push_back(M[r][c]);
        minor.push_back(std::move(row));
      }
      LaurentPoly cof = laurent_det(minor) * det_inv;
      inv[i][j] = ((i + j) % 2 == 0) ? cof : -cof;
    }

  auto fam_ptr = std::make_shared<const GradedFamily>(f);
  auto column = [&](unsigned j) {
    std::vector<LaurentPoly> col(n);
    for (unsigned p = 0; p < n; ++p) col[p] = M[p][j];
    return FamilyElement(fam_ptr, std::move(col));
  };

  BracketTable table;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      auto old_coords = bracket(column(i), column(j)).coords();
      std::vector<LaurentPoly> coords(n);
      for (unsigned r = 0; r < n; ++r)
        for (unsigned p = 0; p < n; ++p) coords[r] += inv[r][p] * old_coords[p];
      if (!coords_zero(coords)) table[{i, j}] = std::move(coords);
    }

  return new_family(n, f.base(), std::move(new_weights), new_h_index, std::move(table),
                    std::move(basis_names));
}

FiberLieAlgebra::FiberLieAlgebra(unsigned rank, std::vector<std::vector<QVector>> structure)
    : rank_(rank), c_(std::move(structure)) {
  assert(c_.size() == rank_);
  for (const auto& row : c_) {
    assert(row.size() == rank_);
    for (const auto& v : row) {
      assert(v.size() == rank_);
      (void)v;
    }
  }
  // antisymmetry and Jacobi over Q(i)
  for (unsigned i = 0; i < rank_; ++i)
    for (unsigned j = 0; j < rank_; ++j)
      for (unsigned k = 0; k < rank_; ++k)
        if (c_[i][j][k] != -c_[j][i][k])
          throw ValidationError("antisymmetry", {i, j}, "fiber structure constants not antisymmetric");
  for (unsigned i = 0; i < rank_; ++i)
    for (unsigned j = 0; j < rank_; ++j)
      for (unsigned k = 0; k < rank_; ++k)
        for (unsigned m = 0; m < rank_; ++m) {
          GaussianRational s(0);
          for (unsigned p = 0; p < rank_; ++p)
            s += c_[i][j][p] * c_[p][k][m] + c_[j][k][p] * c_[p][i][m] + c_[k][i][p] * c_[p][j][m];
          if (!s.is_zero()) throw ValidationError("jacobi", {i, j, k}, "fiber Jacobi identity fails");
        }
}

FiberLieAlgebra fiber_at(const GradedFamily& f, const GaussianRational& t) {
  if (f.base() == BaseRing::Punctured && t.is_zero()) throw PuncturedAtZero();
  unsigned n = f.rank();
  std::vector<std::vector<QVector>> c(n, std::vector<QVector>(n, QVector(n, GaussianRational(0))));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (i == j) continue;
      auto coords = f.bracket_coords(i, j);
      for (unsigned k = 0; k < n; ++k) c[i][j][k] = coords[k].eval(t);
    }
  return {n, std::move(c)};
}

FiberInvariants fiber_invariants(const FiberLieAlgebra& g) {
  unsigned n = g.rank();

  // adjoint matrices: ad_i[k][j] = coefficient of e_k in [e_i, e_j]
  std::vector<QMatrix> ad(n, QMatrix(n, n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned k = 0; k < n; ++k) ad[i].at(k, j) = g.structure(i, j)[k];

  QMatrix killing(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      GaussianRational tr(0);
      for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) tr += ad[i].at(a, b) * ad[j].at(b, a);
      killing.at(i, j) = tr;
    }

  QMatrix derived(0, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) derived.append_row(g.structure(i, j));

  // v central iff sum_i v_i c(i,j,k) = 0 for all j,k
  QMatrix center(n * n, n);
  for (unsigned j = 0; j < n; ++j)
    for (unsigned k = 0; k < n; ++k)
      for (unsigned i = 0; i < n; ++i) center.at(j * n + k, i) = g.structure(i, j)[k];

  return FiberInvariants{
      killing.det(),
      static_cast<unsigned>(killing.rank()),
      static_cast<unsigned>(derived.rank()),
      static_cast<unsigned>(n - center.rank()),
  };
}

}  // namespace hcfam
