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

#include "hcfam/projline.hpp"

#include <cstdlib>
#include <string>

#include "hcfam/errors.hpp"

namespace hcfam {

PairMorphism gluing_morphism(const P1Extension& e) {
  return {e.m, e.n, GaussianRational(1), e.k, 1, /*localized=*/true};
}

P1Extension make_p1(unsigned m, unsigned n, int k) {
  P1Extension e{m, n, k};
  VerifyReport report = verify_morphism(gluing_morphism(e));
  if (!report.ok)
    throw DomainError("InternalError", "gluing morphism failed verification: " +
                                           report.violations.front());
  return e;
}

P1Normalized make_p1(unsigned m, unsigned n, const GaussianRational& c, int k, int s) {
  if (s != 1 && s != -1) throw DomainError("BadSign", "sign must be +1 or -1");
  if (c.is_zero()) throw DomainError("ZeroScale", "gluing data must be invertible");
  // Postcomposing psi^{c',0,s'} : g(n)|C^x -> g(n)|C^x keeps k and lands on
  // psi^{1,k,+1}: for s=+1 take (c^{-1}, +1), for s=-1 take (c, -1).
  PairMorphism aut = s == 1 ? PairMorphism(n, n, c.inv(), 0, 1, true)
                            : PairMorphism(n, n, c, 0, -1, true);
  PairMorphism raw(m, n, c, k, s, true);
  PairMorphism normalized = compose(raw, aut);
  if (!(normalized.c.is_one() && normalized.k == k && normalized.s == 1))
    throw DomainError("InternalError", "normalization did not reach psi^{1,k,+1}");
  return {make_p1(m, n, k), aut};
}

bool p1_isomorphic(const P1Extension& a, const P1Extension& b) { return a == b; }

std::array<int, 3> splitting_type(const P1Extension& e) {
  int diff = static_cast<int>(e.n) - static_cast<int>(e.m);
  return {0, -e.k, e.k + diff};
}

unsigned default_max_degree(const P1Extension& e) {
  return static_cast<unsigned>(std::abs(e.k)) + e.m + e.n + 2;
}

SectionSpace global_sections(const P1Extension& e, unsigned max_degree) {
  unsigned floor = static_cast<unsigned>(std::abs(e.k)) + e.m + e.n;
  if (max_degree < floor)
    throw DegreeBoundTooSmall("max_degree must be at least |k| + m + n = " +
                              std::to_string(floor));

  FamilyPtr chart1 = make_g(e.m);
  FamilyPtr chart2 = make_g(e.n);
  FamilyPtr overlap1 = localize(chart1);
  PairMorphism psi = gluing_morphism(e);

  auto match = [&](unsigned bound, std::vector<SectionPair>* out) {
    unsigned dim = 0;
    for (unsigned i = 0; i < 3; ++i)
      for (unsigned d = 0; d <= bound; ++d) {
        std::vector<LaurentPoly> coords(3);
        coords[i] = LaurentPoly::monomial(GaussianRational(1), static_cast<int>(d));
        FamilyElement glued = apply(psi, FamilyElement(overlap1, coords));

        std::vector<LaurentPoly> flipped(3);
        bool polynomial = true;
        for (unsigned q = 0; q < 3 && polynomial; ++q) {
          flipped[q] = glued.coords()[q].substitute_inverse();
          polynomial = flipped[q].is_polynomial();
        }
        if (!polynomial) continue;
        ++dim;
        if (out) out->push_back({FamilyElement(chart1, coords), FamilyElement(chart2, flipped)});
      }
    return dim;
  };

  SectionSpace space;
  space.dimension = match(max_degree, &space.basis);
  if (match(max_degree + 1, nullptr) != space.dimension)
    throw DegreeBoundTooSmall("dimension still grows past max_degree = " +
                              std::to_string(max_degree));
  return space;
}

SectionSpace global_sections(const P1Extension& e) {
  return global_sections(e, default_max_degree(e));
}

}  // namespace hcfam
