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

#include <algorithm>

#include "doctest.h"

#include "hcfam/projline.hpp"

using namespace hcfam;

namespace {

unsigned h0_of_splitting(const std::array<int, 3>& degrees) {
  unsigned dim = 0;
  for (int d : degrees)
    if (d >= 0) dim += static_cast<unsigned>(d) + 1;
  return dim;
}

}  // namespace

TEST_CASE("gluing data round-trips through the normal form") {
  P1Extension e = make_p1(2, 0, 1);
  CHECK(e.m == 2);
  CHECK(e.n == 0);
  CHECK(e.k == 1);

  PairMorphism psi = gluing_morphism(e);
  CHECK(psi.localized);
  CHECK(psi.c == GaussianRational(1));
  CHECK(psi.s == 1);
  FamilyPtr overlap = localize(make_g(2));
  CHECK(apply(psi, FamilyElement::basis(overlap, 2)).coords()[2] ==
        LaurentPoly::monomial(1, 1));
  CHECK(apply(psi, FamilyElement::basis(overlap, 0)).coords()[0] ==
        LaurentPoly::monomial(1, 1));

  CHECK(make_p1(3, 3, -5).k == -5);
}

TEST_CASE("normalization fixes the scale and sign but not the exponent") {
  for (auto [m, n, k, s] : {std::tuple{3u, 1u, 2, 1}, std::tuple{1u, 3u, -1, -1},
                            std::tuple{0u, 0u, 4, -1}, std::tuple{2u, 2u, 0, 1}}) {
    GaussianRational c = s == 1 ? GaussianRational(3) : GaussianRational::i();
    P1Normalized norm = make_p1(m, n, c, k, s);
    CHECK(norm.extension == P1Extension{m, n, k});
    // the recorded chart-2 automorphism carries the raw gluing to the normal one
    PairMorphism raw(m, n, c, k, s, true);
    CHECK(compose(raw, norm.chart2_automorphism) == gluing_morphism(norm.extension));
  }
  CHECK_THROWS_AS(make_p1(1, 1, GaussianRational(0), 0, 1), DomainError);
  CHECK_THROWS_AS(make_p1(1, 1, GaussianRational(1), 0, 3), DomainError);
}

TEST_CASE("isomorphism is equality of the normal form") {
  CHECK(p1_isomorphic(make_p1(2, 0, 1), make_p1(2, 0, 1)));
  CHECK_FALSE(p1_isomorphic(make_p1(2, 0, 1), make_p1(2, 0, 0)));
  CHECK_FALSE(p1_isomorphic(make_p1(2, 0, 1), make_p1(0, 2, 1)));
  CHECK_FALSE(p1_isomorphic(make_p1(2, 0, 1), make_p1(2, 1, 1)));
}

TEST_CASE("splitting type") {
  CHECK(splitting_type(make_p1(0, 0, 0)) == std::array<int, 3>{0, 0, 0});
  CHECK(splitting_type(make_p1(2, 0, 1)) == std::array<int, 3>{0, -1, -1});
  CHECK(splitting_type(make_p1(0, 0, -2)) == std::array<int, 3>{0, 2, -2});
  CHECK(splitting_type(make_p1(1, 3, 2)) == std::array<int, 3>{0, -2, 4});
}

TEST_CASE("global section dimensions match the splitting type") {
  CHECK(global_sections(make_p1(0, 0, 0)).dimension == 3);
  CHECK(global_sections(make_p1(2, 0, 1)).dimension == 1);
  CHECK(global_sections(make_p1(0, 0, -2)).dimension == 4);

  for (unsigned m = 0; m <= 3; ++m)
    for (unsigned n = 0; n <= 3; ++n)
      for (int k = -3; k <= 3; ++k) {
        P1Extension e = make_p1(m, n, k);
        CHECK(global_sections(e).dimension == h0_of_splitting(splitting_type(e)));
      }
}

TEST_CASE("section dimension is invariant under the chart swap k -> m-n-k") {
  for (unsigned m = 0; m <= 3; ++m)
    for (unsigned n = 0; n <= 3; ++n)
      for (int k = -3; k <= 3; ++k) {
        int swapped = static_cast<int>(m) - static_cast<int>(n) - k;
        auto a = splitting_type(make_p1(m, n, k));
        auto b = splitting_type(make_p1(m, n, swapped));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
        CHECK(global_sections(make_p1(m, n, k)).dimension ==
              global_sections(make_p1(m, n, swapped)).dimension);
      }
}

TEST_CASE("section bases glue across the overlap") {
  for (auto e : {make_p1(0, 0, -2), make_p1(2, 0, 1), make_p1(1, 2, -1)}) {
    SectionSpace space = global_sections(e);
    REQUIRE(space.basis.size() == space.dimension);

    FamilyPtr chart1 = make_g(e.m);
    FamilyPtr chart2 = make_g(e.n);
    FamilyPtr overlap = localize(chart1);
    PairMorphism psi = gluing_morphism(e);

    for (const SectionPair& sec : space.basis) {
      CHECK(*sec.chart1.family() == *chart1);
      CHECK(*sec.chart2.family() == *chart2);

      FamilyElement glued = apply(psi, FamilyElement(overlap, sec.chart1.coords()));
      for (unsigned q = 0; q < 3; ++q)
        CHECK(glued.coords()[q].substitute_inverse() == sec.chart2.coords()[q]);

      // sections are weight-homogeneous monomial lines
      unsigned support = 0;
      for (unsigned q = 0; q < 3; ++q)
        if (!sec.chart1.coords()[q].is_zero()) ++support;
      CHECK(support == 1);
    }
  }
}

TEST_CASE("degree bound guard") {
  P1Extension e = make_p1(2, 1, 2);  // floor = |k| + m + n = 5
  CHECK_THROWS_AS(global_sections(e, 4), DegreeBoundTooSmall);
  CHECK_NOTHROW(global_sections(e, 5));
  CHECK(default_max_degree(e) == 7);
  CHECK(global_sections(e).dimension == global_sections(e, 5).dimension);
}
