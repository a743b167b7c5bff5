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

#include "doctest.h"

#include "helpers.hpp"
#include "hcfam/catalog.hpp"
#include "hcfam/errors.hpp"
#include "hcfam/liefam.hpp"

using namespace hcfam;
using testutil::Rng;

namespace {

// g(n)-shaped table with an arbitrary [X,Y] coordinate vector (Y,H,X order).
BracketTable table_with_xy(const LaurentPoly& y_part, const LaurentPoly& h_part,
                           const LaurentPoly& x_part) {
  BracketTable t;
  t[{0, 1}] = {LaurentPoly(2), LaurentPoly(), LaurentPoly()};   // [Y,H] = 2Y
  t[{0, 2}] = {-y_part, -h_part, -x_part};                      // [Y,X] = -[X,Y]
  t[{1, 2}] = {LaurentPoly(), LaurentPoly(), LaurentPoly(2)};   // [H,X] = 2X
  return t;
}

FamilyElement random_element(Rng& rng, const FamilyPtr& f) {
  std::vector<LaurentPoly> coords;
  for (unsigned i = 0; i < f->rank(); ++i)
    coords.emplace_back(testutil::random_poly(rng, 3));
  return {f, std::move(coords)};
}

}  // namespace

TEST_CASE("new_family accepts g(1)'s table") {
  auto f = new_family(3, BaseRing::Affine, {-2, 0, 2}, 1,
                      table_with_xy(LaurentPoly(), LaurentPoly(Poly::variable()), LaurentPoly()));
  CHECK(*f == *make_g(1));
}

TEST_CASE("validation rejects weight-additivity violations") {
  // [X,Y] = xH + xX puts weight-2 support in a weight-0 bracket.
  LaurentPoly x(Poly::variable());
  try {
    new_family(3, BaseRing::Affine, {-2, 0, 2}, 1, table_with_xy(LaurentPoly(), x, x));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.axiom() == "weight-additivity");
  }
}

TEST_CASE("validation rejects H-compatibility violations") {
  BracketTable t;
  t[{0, 1}] = {LaurentPoly(2), LaurentPoly(), LaurentPoly()};
  t[{1, 2}] = {LaurentPoly(), LaurentPoly(), LaurentPoly(3)};  // [H,X] = 3X
  try {
    new_family(3, BaseRing::Affine, {-2, 0, 2}, 1, std::move(t));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.axiom() == "h-compatibility");
  }
}

TEST_CASE("validation rejects Jacobi violations with a witness triple") {
  // Rank 4, weights (-2,0,2,0): make [X,Y] = W with [H,W]=0=[W,*], then
  // deliberately break Jacobi via [Y,W] = Y.
  BracketTable t;
  t[{0, 1}] = {LaurentPoly(2), LaurentPoly(), LaurentPoly(), LaurentPoly()};
  t[{1, 2}] = {LaurentPoly(), LaurentPoly(), LaurentPoly(2), LaurentPoly()};
  t[{0, 2}] = {LaurentPoly(), LaurentPoly(), LaurentPoly(), LaurentPoly(-1)};  // [Y,X] = -W
  t[{0, 3}] = {LaurentPoly(1), LaurentPoly(), LaurentPoly(), LaurentPoly()};   // [Y,W] = Y
  try {
    new_family(4, BaseRing::Affine, {-2, 0, 2, 0}, 1, std::move(t));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.axiom() == "jacobi");
    CHECK(e.witness().size() == 3);
  }
}

TEST_CASE("validation rejects malformed shapes") {
  BracketTable bad_key;
  bad_key[{2, 1}] = {LaurentPoly(), LaurentPoly(), LaurentPoly(2)};
  CHECK_THROWS_AS(new_family(3, BaseRing::Affine, {-2, 0, 2}, 1, std::move(bad_key)),
                  ValidationError);

  BracketTable bad_len;
  bad_len[{0, 1}] = {LaurentPoly(2)};
  CHECK_THROWS_AS(new_family(3, BaseRing::Affine, {-2, 0, 2}, 1, std::move(bad_len)),
                  ValidationError);

  // affine family with a Laurent coordinate
  BracketTable laurent_entry;
  laurent_entry[{0, 2}] = {LaurentPoly(), LaurentPoly::monomial(1, -1), LaurentPoly()};
  CHECK_THROWS_AS(new_family(3, BaseRing::Affine, {-2, 0, 2}, 1, std::move(laurent_entry)),
                  ValidationError);

  // nonzero weight at h_index
  CHECK_THROWS_AS(new_family(3, BaseRing::Affine, {-2, 1, 2}, 1, BracketTable{}),
                  ValidationError);
}

TEST_CASE("bracket is bilinear and matches the table") {
  FamilyPtr g1 = make_g(1);
  FamilyPtr g2 = make_g(2);
  FamilyElement X1 = FamilyElement::basis(g1, 2);
  FamilyElement Y1 = FamilyElement::basis(g1, 0);
  FamilyElement H1 = FamilyElement::basis(g1, 1);
  CHECK(bracket(X1, Y1) == LaurentPoly(Poly::variable()) * H1);

  LaurentPoly x(Poly::variable());
  FamilyElement xX2 = x * FamilyElement::basis(g2, 2);
  CHECK(bracket(xX2, FamilyElement::basis(g2, 0)) ==
        LaurentPoly(Poly::monomial(1, 3)) * FamilyElement::basis(g2, 1));

  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    FamilyElement u = random_element(rng, g2);
    FamilyElement v = random_element(rng, g2);
    CHECK(bracket(u, u).is_zero());
    CHECK(bracket(u, v) == -bracket(v, u));
  }

  CHECK_THROWS_AS(bracket(X1, FamilyElement::basis(g2, 0)), FamilyMismatch);
}

TEST_CASE("jacobi holds for random elements of catalog families") {
  Rng rng(17);
  for (unsigned n : {0u, 1u, 3u}) {
    FamilyPtr g = make_g(n);
    for (int trial = 0; trial < 20; ++trial) {
      FamilyElement u = random_element(rng, g);
      FamilyElement v = random_element(rng, g);
      FamilyElement w = random_element(rng, g);
      FamilyElement total =
          bracket(bracket(u, v), w) + bracket(bracket(v, w), u) + bracket(bracket(w, u), v);
      CHECK(total.is_zero());
    }
  }
}

TEST_CASE("so2 action") {
  FamilyPtr g3 = make_g(3);
  FamilyElement X = FamilyElement::basis(g3, 2);
  FamilyElement H = FamilyElement::basis(g3, 1);
  CHECK(so2_act(GroupElement(GaussianRational::i()), X) == -X);
  CHECK(so2_act(GroupElement(GaussianRational(7)), H) == H);
  CHECK_THROWS_AS(GroupElement(GaussianRational(0)), DomainError);

  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    GroupElement z1(testutil::random_nonzero(rng));
    GroupElement z2(testutil::random_nonzero(rng));
    FamilyElement u = random_element(rng, g3);
    FamilyElement v = random_element(rng, g3);
    CHECK(so2_act(z1, bracket(u, v)) == bracket(so2_act(z1, u), so2_act(z1, v)));
    GroupElement z12(z1.z() * z2.z());
    CHECK(so2_act(z12, v) == so2_act(z1, so2_act(z2, v)));
  }
}

TEST_CASE("homogeneity predicate") {
  FamilyPtr g1 = make_g(1);
  CHECK(FamilyElement::basis(g1, 2).homogeneous_of_weight(2));
  CHECK_FALSE(FamilyElement::basis(g1, 2).homogeneous_of_weight(0));
  CHECK(FamilyElement::zero(g1).homogeneous_of_weight(2));
  CHECK(FamilyElement::zero(g1).homogeneous_of_weight(0));
  FamilyElement mixed = FamilyElement::basis(g1, 2) + FamilyElement::basis(g1, 1);
  CHECK_FALSE(mixed.homogeneous_of_weight(2));
}

TEST_CASE("localize") {
  FamilyPtr g1 = make_g(1);
  FamilyPtr loc = localize(g1);
  CHECK(loc->base() == BaseRing::Punctured);
  CHECK(loc->table() == g1->table());
  CHECK(loc->weights() == g1->weights());
  CHECK_THROWS_AS(localize(loc), DomainError);

  // localization admits honest Laurent coordinates
  FamilyElement v(loc, {LaurentPoly::monomial(1, -2), LaurentPoly(), LaurentPoly()});
  CHECK(v.homogeneous_of_weight(-2));
  // ... which the affine family rejects
  CHECK_THROWS(FamilyElement(g1, {LaurentPoly::monomial(1, -2), LaurentPoly(), LaurentPoly()}));
}

TEST_CASE("fiber evaluation") {
  FamilyPtr g3 = make_g(3);
  FiberLieAlgebra at2 = fiber_at(*g3, GaussianRational(2));
  // [X,Y] = 8H in the fiber: structure(0,2) holds [Y,X] = -8H.
  CHECK(at2.structure(2, 0)[1] == GaussianRational(8));

  FiberLieAlgebra at0 = fiber_at(*g3, GaussianRational(0));
  CHECK(at0.structure(2, 0)[1] == GaussianRational(0));

  CHECK_THROWS_AS(fiber_at(*localize(g3), GaussianRational(0)), PuncturedAtZero);
  FiberLieAlgebra loc1 = fiber_at(*localize(g3), GaussianRational(1));
  CHECK(loc1.structure(2, 0)[1] == fiber_at(*g3, GaussianRational(1)).structure(2, 0)[1]);
}

TEST_CASE("evaluation is a Lie homomorphism") {
  FamilyPtr g2 = make_g(2);
  Rng rng(29);
  GaussianRational t(3);
  FiberLieAlgebra fiber = fiber_at(*g2, t);
  for (int trial = 0; trial < 20; ++trial) {
    FamilyElement u = random_element(rng, g2);
    FamilyElement v = random_element(rng, g2);
    FamilyElement w = bracket(u, v);
    // evaluate coordinates, then bracket in the fiber
    QVector ue, ve, we;
    for (unsigned i = 0; i < 3; ++i) {
      ue.push_back(u.coords()[i].eval(t));
      ve.push_back(v.coords()[i].eval(t));
      we.push_back(w.coords()[i].eval(t));
    }
    QVector fiber_bracket(3, GaussianRational(0));
    for (unsigned i = 0; i < 3; ++i)
      for (unsigned j = 0; j < 3; ++j) {
        if (i == j) continue;
        const QVector& c = fiber.structure(i, j);
        for (unsigned q = 0; q < 3; ++q) fiber_bracket[q] += ue[i] * ve[j] * c[q];
      }
    CHECK(fiber_bracket == we);
  }
}

TEST_CASE("fiber invariants") {
  // generic fiber of g(n): [X,Y] = cH with c = t^n
  for (unsigned n : {0u, 1u, 2u, 3u}) {
    GaussianRational t(2);
    GaussianRational c = GaussianRational(2).pow(n);
    FiberInvariants inv = fiber_invariants(fiber_at(*make_g(n), t));
    CHECK(inv.killing_det == GaussianRational(-128) * c * c);
    CHECK(inv.killing_rank == 3);
    CHECK(inv.derived_dim == 3);
    CHECK(inv.center_dim == 0);
  }

  FiberInvariants degenerate = fiber_invariants(fiber_at(*make_g(1), GaussianRational(0)));
  CHECK(degenerate.killing_rank == 1);
  CHECK(degenerate.derived_dim == 2);
  CHECK(degenerate.center_dim == 0);

  FiberInvariants constant = fiber_invariants(fiber_at(*make_g(0), GaussianRational(5)));
  CHECK(constant.killing_det == GaussianRational(-128));
  CHECK(constant.center_dim == 0);
}

TEST_CASE("killing rank distinguishes the special fiber") {
  for (unsigned n : {1u, 2u, 4u}) {
    FamilyPtr g = make_g(n);
    CHECK(fiber_invariants(fiber_at(*g, GaussianRational(0))).killing_rank == 1);
    for (int t : {1, 2, -1})
      CHECK(fiber_invariants(fiber_at(*g, GaussianRational(t))).killing_rank == 3);
    CHECK(fiber_invariants(fiber_at(*g, GaussianRational::i())).killing_rank == 3);
  }
  for (int t : {1, 2, -1})
    CHECK(fiber_invariants(fiber_at(*make_g(0), GaussianRational(t))).killing_rank == 3);
}

TEST_CASE("change_basis on a diagonal rescale reproduces a valid family") {
  FamilyPtr g2 = make_g(2);
  // columns: new basis vectors (3Y, H, 5X) in old coordinates — but expressed
  // as the matrix taking new coordinates to old ones.
  std::vector<std::vector<LaurentPoly>> M = {
      {LaurentPoly(3), LaurentPoly(), LaurentPoly()},
      {LaurentPoly(), LaurentPoly(1), LaurentPoly()},
      {LaurentPoly(), LaurentPoly(), LaurentPoly(5)}};
  FamilyPtr changed = change_basis(*g2, M, {-2, 0, 2}, 1);
  // [X', Y'] = 15 [X,Y] = 15 x^2 H = 15 x^2 H'
  CHECK(changed->bracket_coords(2, 0)[1] == LaurentPoly(Poly::monomial(15, 2)));

  std::vector<std::vector<LaurentPoly>> singular = {
      {LaurentPoly(1), LaurentPoly(), LaurentPoly()},
      {LaurentPoly(), LaurentPoly(1), LaurentPoly()},
      {LaurentPoly(1), LaurentPoly(), LaurentPoly()}};
  CHECK_THROWS_AS(change_basis(*g2, singular, {-2, 0, 2}, 1), DomainError);

  // x*Y is not an invertible change over C[x] ...
  std::vector<std::vector<LaurentPoly>> unit_fail = {
      {LaurentPoly(Poly::variable()), LaurentPoly(), LaurentPoly()},
      {LaurentPoly(), LaurentPoly(1), LaurentPoly()},
      {LaurentPoly(), LaurentPoly(), LaurentPoly(1)}};
  CHECK_THROWS_AS(change_basis(*g2, unit_fail, {-2, 0, 2}, 1), DomainError);
  // ... but is over C[x, 1/x]
  FamilyPtr loc_changed = change_basis(*localize(g2), unit_fail, {-2, 0, 2}, 1);
  CHECK(loc_changed->bracket_coords(2, 0)[1] == LaurentPoly(Poly::monomial(1, 3)));
}
