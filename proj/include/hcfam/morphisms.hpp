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
#include <variant>
#include <vector>

#include "hcfam/catalog.hpp"
#include "hcfam/classify.hpp"

namespace hcfam {

/* Nonzero morphism g(m) -> g(n) of the parametric form
     s = +1:  X -> c x^k X,  Y -> c^-1 x^(m-n-k) Y,  H ->  H
     s = -1:  X -> c x^k Y,  Y -> c^-1 x^(m-n-k) X,  H -> -H
   with the group part k(z) -> k(z^s). Over the affine line this requires
   m >= n and 0 <= k <= m-n; over the punctured line k is any integer. */
struct PairMorphism {
  PairMorphism(unsigned m, unsigned n, GaussianRational c, int k, int s, bool localized = false);

  unsigned m, n;
  GaussianRational c;
  int k;
  int s;
  bool localized;

  friend bool operator==(const PairMorphism& a, const PairMorphism& b) {
    return a.m == b.m && a.n == b.n && a.c == b.c && a.k == b.k && a.s == b.s &&
           a.localized == b.localized;
  }
};

/* The zero map, kept outside PairMorphism's invariants. */
struct ZeroMorphism {
  unsigned m, n;
  bool localized;

  friend bool operator==(const ZeroMorphism& a, const ZeroMorphism& b) {
    return a.m == b.m && a.n == b.n && a.localized == b.localized;
  }
};

using Morphism = std::variant<ZeroMorphism, PairMorphism>;

/* Shape of Hom(g(m), g(n)): zero iff m < n in the affine case; otherwise the
   nonzero morphisms form the (c, k, s) family with the stated k range. */
struct HomSpace {
  unsigned m, n;
  bool localized;
  bool zero_only;
  std::optional<int> k_min, k_max;  // empty in the localized case (k ranges over Z)
};

HomSpace hom_space(unsigned m, unsigned n, bool localized = false);

FamilyElement apply(const PairMorphism& psi, const FamilyElement& v);

/* Basis images of an arbitrary candidate map g(m) -> g(n) with declared group
   part k(z) -> k(z^s); used to check maps that are not in parametric form. */
struct RawPairMap {
  unsigned m, n;
  int s;
  bool localized;
  std::array<FamilyElement, 3> images;  // of (Y, H, X)
};

struct VerifyReport {
  bool ok;
  std::vector<std::string> violations;
};

VerifyReport verify_morphism(const RawPairMap& map);
VerifyReport verify_morphism(const PairMorphism& psi);

RawPairMap raw_images(const PairMorphism& psi);

/* Recovers (c, k, s) parameters from basis images when the map is parametric
   and verifies; empty when the map is zero on every basis vector; throws
   NotCanonical-style DomainError when the map is neither. */
std::optional<Morphism> fit_parametric(const RawPairMap& map);

/* Diagrammatic composition: first phi: g(m) -> g(n), then psi: g(n) -> g(p).
   Extensionally correct: apply(compose(phi,psi), v) = apply(psi, apply(phi, v)).
   For s_phi = +1 the parameters compose as (c1 c2, k1 + k2, s2); for
   s_phi = -1 they compose as (c1 / c2, k1 + (n - p) - k2, -s2) because psi
   acts on the flipped (X, Y) pair. */
PairMorphism compose(const PairMorphism& phi, const PairMorphism& psi);
Morphism compose(const Morphism& phi, const Morphism& psi);

/* Substitution x -> mu(x) in every bracket coefficient. */
FamilyPtr pullback(const GradedFamily& f, const Poly& mu);

/* g(n) -> g(0): X -> X, Y -> x^n Y, H -> H; its image is l(n). */
PairMorphism embed_in_constant(unsigned n);

}  // namespace hcfam
