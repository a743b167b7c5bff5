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

#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hcfam/laurent.hpp"
#include "hcfam/linalg.hpp"

namespace hcfam {

enum class BaseRing { Affine, Punctured };

/* Bracket table over the base ring: entry (i,j) with i<j holds the coordinate
   vector of [e_i, e_j]; missing entries are zero. Coordinates are stored as
   Laurent values; an Affine family only admits polynomial entries. */
using BracketTable = std::map<std::pair<unsigned, unsigned>, std::vector<LaurentPoly>>;

/* A free module over C[x] or C[x,1/x] with bracket table, SO(2,C)-weight
   grading, and a distinguished weight-zero element H whose adjoint action is
   diagonal with the weights as eigenvalues. Construction validates weight
   additivity, H-compatibility and the Jacobi identity and throws
   ValidationError otherwise. */
class GradedFamily {
public:
  GradedFamily(unsigned rank, BaseRing base, std::vector<int> weights, unsigned h_index,
               BracketTable table, std::vector<std::string> basis_names = {});

  unsigned rank() const { return rank_; }
  BaseRing base() const { return base_; }
  const std::vector<int>& weights() const { return weights_; }
  unsigned h_index() const { return h_index_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const BracketTable& table() const { return table_; }

  /* [e_i, e_j] for any index pair, with the antisymmetric sign handled. */
  std::vector<LaurentPoly> bracket_coords(unsigned i, unsigned j) const;

  /* Re-runs the construction-time axiom checks. */
  void validate() const;

  /* Structural equality; basis names are presentation only. */
  friend bool operator==(const GradedFamily& a, const GradedFamily& b) {
    return a.rank_ == b.rank_ && a.base_ == b.base_ && a.weights_ == b.weights_ &&
           a.h_index_ == b.h_index_ && a.table_ == b.table_;
  }
  friend bool operator!=(const GradedFamily& a, const GradedFamily& b) { return !(a == b); }

private:
  unsigned rank_;
  BaseRing base_;
  std::vector<int> weights_;
  unsigned h_index_;
  BracketTable table_;
  std::vector<std::string> names_;
};

using FamilyPtr = std::shared_ptr<const GradedFamily>;

FamilyPtr new_family(unsigned rank, BaseRing base, std::vector<int> weights, unsigned h_index,
                     BracketTable table, std::vector<std::string> basis_names = {});

/* Element of a family: coordinate vector over the base ring. Arithmetic
   requires structurally equal families. */
class FamilyElement {
public:
  FamilyElement(FamilyPtr family, std::vector<LaurentPoly> coords);

  static FamilyElement basis(const FamilyPtr& family, unsigned i);
  static FamilyElement zero(const FamilyPtr& family);

  const FamilyPtr& family() const { return fam_; }
  const std::vector<LaurentPoly>& coords() const { return coords_; }
  bool is_zero() const;

  /* Support lies in a single weight-w graded piece (the zero element is
     homogeneous of every weight). */
  bool homogeneous_of_weight(int w) const;

  FamilyElement operator-() const;
  FamilyElement& operator+=(const FamilyElement& o);
  FamilyElement& operator-=(const FamilyElement& o);

  friend FamilyElement operator+(FamilyElement a, const FamilyElement& b) { return a += b; }
  friend FamilyElement operator-(FamilyElement a, const FamilyElement& b) { return a -= b; }
  friend FamilyElement operator*(const LaurentPoly& s, FamilyElement v);
  friend FamilyElement operator*(const GaussianRational& s, FamilyElement v);

  friend bool operator==(const FamilyElement& a, const FamilyElement& b);
  friend bool operator!=(const FamilyElement& a, const FamilyElement& b) { return !(a == b); }

private:
  FamilyPtr fam_;
  std::vector<LaurentPoly> coords_;
};

FamilyElement bracket(const FamilyElement& u, const FamilyElement& v);

/* k(z) = diag(z, 1/z) in SO(2,C); acts on a weight-w coordinate by z^w. */
class GroupElement {
public:
  explicit GroupElement(GaussianRational z);
  const GaussianRational& z() const { return z_; }

private:
  GaussianRational z_;
};

FamilyElement so2_act(const GroupElement& g, const FamilyElement& v);

/* Base change C[x] -> C[x,1/x]; input must be Affine. */
FamilyPtr localize(const FamilyPtr& f);

/* New family presented on the basis given by the columns of M (each column
   lists old-basis coordinates of a new basis vector). M must be invertible
   over the base ring. */
FamilyPtr change_basis(const GradedFamily& f, const std::vector<std::vector<LaurentPoly>>& M,
                       std::vector<int> new_weights, unsigned new_h_index,
                       std::vector<std::string> basis_names = {});

/* Finite-dimensional Lie algebra over Q(i): the fiber of a family at a point. */
class FiberLieAlgebra {
public:
  FiberLieAlgebra(unsigned rank, std::vector<std::vector<QVector>> structure);

  unsigned rank() const { return rank_; }
  /* coordinates of [e_i, e_j] */
  const QVector& structure(unsigned i, unsigned j) const { return c_[i][j]; }

private:
  unsigned rank_;
  std::vector<std::vector<QVector>> c_;
};

FiberLieAlgebra fiber_at(const GradedFamily& f, const GaussianRational& t);

struct FiberInvariants {
  GaussianRational killing_det;
  unsigned killing_rank;
  unsigned derived_dim;
  unsigned center_dim;
};

FiberInvariants fiber_invariants(const FiberLieAlgebra& g);

}  // namespace hcfam
