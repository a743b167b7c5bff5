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

#include "hcfam/classify.hpp"

#include <algorithm>

namespace hcfam {

ClassificationResult classify_extension(const GradedFamily& f) {
  if (f.base() != BaseRing::Affine)
    throw DomainError("NotAffine", "classification expects a family over the affine line");

  std::vector<int> sorted = f.weights();
  std::sort(sorted.begin(), sorted.end());
  if (f.rank() != 3 || sorted != std::vector<int>{-2, 0, 2})
    throw NotExtensionError(NotExtensionError::Reason::WrongWeights,
                            "weight multiset must be {-2, 0, 2}");

  unsigned iy = 0, ix = 0;
  for (unsigned i = 0; i < 3; ++i) {
    if (f.weights()[i] == -2) iy = i;
    if (f.weights()[i] == 2) ix = i;
  }

  // [X, Y] must be a monomial multiple of H; gradedness already confines it
  // to the weight-0 line.
  LaurentPoly fx = f.bracket_coords(ix, iy)[f.h_index()];
  if (fx.is_zero())
    throw NotExtensionError(NotExtensionError::Reason::DegenerateBracket,
                            "[X, Y] vanishes identically");
  auto mono = fx.as_monomial();
  if (!mono)
    throw NotExtensionError(NotExtensionError::Reason::NonMonomial,
                            "[X, Y] coefficient has " + std::to_string(fx.term_count()) +
                                " terms; a single monomial is required",
                            fx.to_string());

  auto [c, n] = *mono;

  // columns: canonical Y = (1/c) e_iy, canonical H = e_h, canonical X = e_ix
  std::vector<std::vector<LaurentPoly>> m(3, std::vector<LaurentPoly>(3));
  m[iy][0] = LaurentPoly(c.inv());
  m[f.h_index()][1] = LaurentPoly(1);
  m[ix][2] = LaurentPoly(1);

  return ClassificationResult{static_cast<unsigned>(n), c, std::move(m)};
}

namespace {

/* checks the g(n) relations for a claimed canonical triple and returns the
   unit u with X = u * e_ix */
GaussianRational check_canonical(const std::array<FamilyElement, 3>& b, const char* tag) {
  const auto& [Y, H, X] = b;
  const auto& fam = *Y.family();
  if (*H.family() != fam || *X.family() != fam) throw FamilyMismatch();

  if (!X.homogeneous_of_weight(2) || !Y.homogeneous_of_weight(-2) ||
      !H.homogeneous_of_weight(0))
    throw NotCanonical(std::string(tag) + ": basis is not weight-homogeneous");
  if (X.is_zero() || Y.is_zero())
    throw NotCanonical(std::string(tag) + ": degenerate basis");
  if (H != FamilyElement::basis(Y.family(), fam.h_index()))
    throw NotCanonical(std::string(tag) + ": H differs from the designated section");

  if (bracket(H, X) != LaurentPoly(2) * X || bracket(H, Y) != LaurentPoly(-2) * Y)
    throw NotCanonical(std::string(tag) + ": adjoint action of H is not (2, -2)");

  ClassificationResult cls = classify_extension(fam);
  unsigned ix = 0;
  for (unsigned i = 0; i < 3; ++i)
    if (fam.weights()[i] == 2) ix = i;

  FamilyElement xn_h = LaurentPoly::monomial(1, static_cast<int>(cls.n)) *
                       FamilyElement::basis(Y.family(), fam.h_index());
  if (bracket(X, Y) != xn_h)
    throw NotCanonical(std::string(tag) + ": [X, Y] differs from x^n H");

  auto unit = X.coords()[ix].as_monomial();
  if (!unit || unit->second != 0)
    throw NotCanonical(std::string(tag) + ": X is not a constant multiple of the weight-2 line");
  return unit->first;
}

}  // namespace

GaussianRational canonical_uniqueness_witness(const std::array<FamilyElement, 3>& b1,
                                              const std::array<FamilyElement, 3>& b2) {
  if (*b1[0].family() != *b2[0].family()) throw FamilyMismatch();
  GaussianRational u1 = check_canonical(b1, "first basis");
  GaussianRational u2 = check_canonical(b2, "second basis");
  GaussianRational lambda = u2 / u1;
  // [X,Y] = x^n H for both bases forces the Y-units to be inverse-related;
  // anything else would contradict the checks above.
  if (b2[2] != lambda * b1[2] || b2[0] != lambda.inv() * b1[0])
    throw NoWitness("canonical bases are not related by a constant rescaling");
  return lambda;
}

std::optional<std::string> class_label(unsigned n) {
  switch (n) {
    case 0: return "constant";
    case 1: return "contraction";
    case 2: return "deformation";
    default: return std::nullopt;
  }
}

std::vector<ClassSummary> enumerate_classes(unsigned max_n) {
  std::vector<ClassSummary> out;
  out.reserve(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) {
    ClassificationResult r = classify_extension(*make_g(n));
    out.push_back(ClassSummary{r.n, class_label(r.n)});
  }
  return out;
}

}  // namespace hcfam
