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

// Seeded random-value generators shared by the property tests.

#pragma once

#include <random>
#include <vector>

#include "hcfam/laurent.hpp"
#include "hcfam/poly.hpp"

namespace hcfam::testutil {

using Rng = std::mt19937_64;

inline GaussianRational random_scalar(Rng& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> has_im(0, 1);
  Rational re = make_rational(num(rng), den(rng));
  Rational im = has_im(rng) ? make_rational(num(rng), den(rng)) : Rational(0);
  return {re, im};
}

inline GaussianRational random_nonzero(Rng& rng) {
  for (;;) {
    GaussianRational s = random_scalar(rng);
    if (!s.is_zero()) return s;
  }
}

inline Poly random_poly(Rng& rng, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::vector<GaussianRational> cs(deg(rng) + 1);
  for (auto& c : cs) c = random_scalar(rng);
  return Poly(std::move(cs));
}

inline Poly random_nonzero_poly(Rng& rng, unsigned max_degree) {
  for (;;) {
    Poly p = random_poly(rng, max_degree);
    if (!p.is_zero()) return p;
  }
}

inline LaurentPoly random_laurent(Rng& rng, int min_exp, int max_exp) {
  std::uniform_int_distribution<int> lo(min_exp, max_exp);
  int start = lo(rng);
  std::uniform_int_distribution<int> len(1, max_exp - start + 1);
  std::vector<GaussianRational> cs(static_cast<size_t>(len(rng)));
  for (auto& c : cs) c = random_scalar(rng);
  return {start, std::move(cs)};
}

}  // namespace hcfam::testutil
