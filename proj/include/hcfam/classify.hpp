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
#include <optional>
#include <string>
#include <vector>

#include "hcfam/catalog.hpp"

namespace hcfam {

/* Result of classifying an affine rank-3 family as g(n). canonical_change is
   the base-change matrix whose columns express the canonical (Y, H, X) basis
   in the input basis; change_basis with it reproduces make_g(n)'s table.
   scale_c is the monomial coefficient of [X, Y] in the input basis. */
struct ClassificationResult {
  unsigned n;
  GaussianRational scale_c;
  std::vector<std::vector<LaurentPoly>> canonical_change;
};

ClassificationResult classify_extension(const GradedFamily& f);

/* Canonical bases are (Y, H, X) triples over f with H literally the
   designated basis vector, homogeneous weights (-2, 0, 2) and the g(n)
   bracket relations. Two canonical bases differ by X' = z^2 X, Y' = z^-2 Y;
   the returned witness is z^2. */
GaussianRational canonical_uniqueness_witness(const std::array<FamilyElement, 3>& b1,
                                              const std::array<FamilyElement, 3>& b2);

struct ClassSummary {
  unsigned n;
  std::optional<std::string> label;  // "constant", "contraction", "deformation" for n <= 2
};

std::vector<ClassSummary> enumerate_classes(unsigned max_n);

std::optional<std::string> class_label(unsigned n);

}  // namespace hcfam
