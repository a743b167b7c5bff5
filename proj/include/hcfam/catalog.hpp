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

#include "hcfam/liefam.hpp"

namespace hcfam {

/* Basis order of all catalog families: (Y, H, X) with weights (-2, 0, 2),
   h_index 1. g(n) has [H,X] = 2X, [H,Y] = -2Y, [X,Y] = x^n H. */
FamilyPtr make_g(unsigned n);

/* A family together with a realization inside the constant family g(0):
   embedding[i] is the image of abstract basis vector i. */
struct EmbeddedFamily {
  FamilyPtr family;
  std::array<FamilyElement, 3> embedding;
};

/* l(n) in g(0): basis (x^n Y, H, X); abstract type g(n). */
EmbeddedFamily make_l(unsigned n);

/* s(k) in g(0): basis (x^k Y, H, x^k X); abstract type g(2k). */
EmbeddedFamily make_s(unsigned k);

/* Membership in the embedded copies, as submodule conditions on the g(0)
   coordinates: l(n) needs x^n | Y-coordinate; s(k) needs x^k dividing both the
   X- and Y-coordinates. */
bool member_l(const FamilyElement& v, unsigned n);
bool member_s(const FamilyElement& v, unsigned k);

}  // namespace hcfam
