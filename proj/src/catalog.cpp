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

#include "hcfam/catalog.hpp"

namespace hcfam {

FamilyPtr make_g(unsigned n) {
  BracketTable table;
  // [Y,H] = 2Y, [Y,X] = -x^n H, [H,X] = 2X
  table[{0, 1}] = {LaurentPoly(2), LaurentPoly(), LaurentPoly()};
  table[{0, 2}] = {LaurentPoly(), LaurentPoly::monomial(-1, static_cast<int>(n)), LaurentPoly()};
  table[{1, 2}] = {LaurentPoly(), LaurentPoly(), LaurentPoly(2)};
  return new_family(3, BaseRing::Affine, {-2, 0, 2}, 1, std::move(table), {"Y", "H", "X"});
}

namespace {

EmbeddedFamily embed(unsigned abstract_n, const LaurentPoly& y_coeff, const LaurentPoly& x_coeff) {
  FamilyPtr g0 = make_g(0);
  auto scaled_basis = [&](unsigned i, const LaurentPoly& s) {
    return s * FamilyElement::basis(g0, i);
  };
  return EmbeddedFamily{make_g(abstract_n),
                        {scaled_basis(0, y_coeff), FamilyElement::basis(g0, 1),
                         scaled_basis(2, x_coeff)}};
}

}  // namespace

EmbeddedFamily make_l(unsigned n) {
  return embed(n, LaurentPoly::monomial(1, static_cast<int>(n)), LaurentPoly(1));
}

EmbeddedFamily make_s(unsigned k) {
  LaurentPoly xk = LaurentPoly::monomial(1, static_cast<int>(k));
  return embed(2 * k, xk, xk);
}

namespace {

void require_g0(const FamilyElement& v) {
  static const FamilyPtr g0 = make_g(0);
  if (*v.family() != *g0) throw FamilyMismatch("membership tests expect an element of g(0)");
}

}  // namespace

bool member_l(const FamilyElement& v, unsigned n) {
  require_g0(v);
  return v.coords()[0].divisible_by_power(static_cast<int>(n));
}

bool member_s(const FamilyElement& v, unsigned k) {
  require_g0(v);
  return v.coords()[0].divisible_by_power(static_cast<int>(k)) &&
         v.coords()[2].divisible_by_power(static_cast<int>(k));
}

}  // namespace hcfam
