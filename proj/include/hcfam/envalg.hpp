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

// Universal enveloping algebra of the affine family g(n), with elements kept
// in Poincare-Birkhoff-Witt normal form relative to the ordered basis
// Y < H < X.  A monomial Y^a H^b X^c is coded by its exponent triple and
// carries a coefficient in C[x].

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hcfam/poly.hpp"

namespace hcfam {

struct PBWMono {
  unsigned y = 0;
  unsigned h = 0;
  unsigned x = 0;

  unsigned total_degree() const { return y + h + x; }
  auto operator<=>(const PBWMono&) const = default;
};

enum class Gen : uint8_t { Y = 0, H = 1, X = 2 };

// Element of U(g(n)).  The family parameter n is part of the value: products
// rewrite X Y -> Y X + x^n H, so elements of distinct enveloping algebras
// never mix.
class PBWElement {
 public:
  explicit PBWElement(unsigned n) : n_(n) {}
  PBWElement(unsigned n, const Poly& scalar);

  static PBWElement zero(unsigned n) { return PBWElement(n); }
  static PBWElement one(unsigned n) { return {n, Poly(1)}; }
  static PBWElement generator(unsigned n, Gen g);

  unsigned family_parameter() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<PBWMono, Poly>& terms() const { return terms_; }
  Poly coefficient(const PBWMono& m) const;
  unsigned pbw_degree() const;  // max total degree of a monomial; 0 when zero

  void add_term(const PBWMono& m, const Poly& coeff);

  PBWElement operator-() const;
  PBWElement& operator+=(const PBWElement& rhs);
  PBWElement& operator-=(const PBWElement& rhs);
  PBWElement& operator*=(const Poly& scalar);

  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator*(const Poly& s, PBWElement a) { return a *= s; }

  friend bool operator==(const PBWElement& a, const PBWElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  unsigned n_;
  std::map<PBWMono, Poly> terms_;  // normal form: no zero coefficients

  friend PBWElement pbw_mul(const PBWElement&, const PBWElement&);
};

// Product in U(g(n)), straightened back to PBW normal form by the rewriting
// rules  X Y -> Y X + x^n H,  X H -> H X - 2 X,  H Y -> Y H - 2 Y.
PBWElement pbw_mul(const PBWElement& a, const PBWElement& b);

PBWElement commutator(const PBWElement& a, const PBWElement& b);

// Casimir element  (x^n / 8) H^2 + (1/4)(X Y + Y X), returned in normal form.
PBWElement casimir(unsigned n);

struct CenterProbeResult {
  unsigned pbw_degree = 0;
  unsigned coeff_degree = 0;
  std::vector<PBWElement> basis;  // of the centralizer slice found
  unsigned dimension = 0;
};

// Solves, exactly, for all u in U(g(n)) with PBW degree <= pbw_degree and
// coefficient x-degree <= coeff_degree such that [u, Y] = [u, H] = [u, X] = 0.
CenterProbeResult center_probe(unsigned n, unsigned pbw_degree, unsigned coeff_degree);

}  // namespace hcfam
