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

// Extensions over the projective line, stored as gluing data: the family g(m)
// on chart 1, g(n) on chart 2, and a localized pair morphism identifying them
// over the punctured overlap. The normal form fixes the gluing to psi^{1,k,+1},
// so the triple (m, n, k) is the whole datum.

#pragma once

#include <array>
#include <vector>

#include "hcfam/catalog.hpp"
#include "hcfam/morphisms.hpp"

namespace hcfam {

struct P1Extension {
  unsigned m = 0;  // chart-1 family index
  unsigned n = 0;  // chart-2 family index
  int k = 0;       // gluing exponent of psi^{1,k,+1}

  friend bool operator==(const P1Extension&, const P1Extension&) = default;
};

// Any (m, n, k) is admissible; the gluing morphism is built and re-verified.
P1Extension make_p1(unsigned m, unsigned n, int k);

// General gluing data psi^{c,k,s} is normalized to psi^{1,k,+1} by
// postcomposing an automorphism of the chart-2 family; the automorphism used
// is returned alongside the normal form. k is unchanged by normalization.
struct P1Normalized {
  P1Extension extension;
  PairMorphism chart2_automorphism;
};
P1Normalized make_p1(unsigned m, unsigned n, const GaussianRational& c, int k, int s);

// The localized morphism g(m)|C^x -> g(n)|C^x carrying chart-1 data to
// chart-2 data over the overlap.
PairMorphism gluing_morphism(const P1Extension& e);

// Normal forms are pairwise distinct: isomorphism is triple equality.
bool p1_isomorphic(const P1Extension& a, const P1Extension& b);

// Line-bundle degrees [0, -k, k+n-m] of the weight-(0, +2, -2) summands.
std::array<int, 3> splitting_type(const P1Extension& e);

// A global section presented per chart: chart1 in g(m), chart2 in g(n), both
// with polynomial coordinates, glued over the overlap.
struct SectionPair {
  FamilyElement chart1;
  FamilyElement chart2;
};

struct SectionSpace {
  unsigned dimension = 0;
  std::vector<SectionPair> basis;  // monomial sections, echelon by construction
};

unsigned default_max_degree(const P1Extension& e);  // |k| + m + n + 2

// Direct chart matching: enumerate chart-1 monomial sections of degree up to
// max_degree, push each through the gluing, substitute x -> 1/x and keep the
// ones that land back in polynomial coordinates. Throws DegreeBoundTooSmall if
// max_degree < |k| + m + n or if raising the bound by one changes the result.
SectionSpace global_sections(const P1Extension& e, unsigned max_degree);
SectionSpace global_sections(const P1Extension& e);

}  // namespace hcfam
