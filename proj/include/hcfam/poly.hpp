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

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcfam/rational.hpp"

namespace hcfam {

/* Polynomial over Q(i), dense coefficients in ascending degree. The zero
   polynomial stores no coefficients; otherwise the leading coefficient is
   nonzero. degree() is empty for zero (no -1 sentinel). */
class Poly {
public:
  Poly() = default;
  Poly(const GaussianRational& c);  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(std::initializer_list<GaussianRational> coeffs);
  explicit Poly(std::vector<GaussianRational> coeffs);

  static Poly monomial(const GaussianRational& c, unsigned k);
  static Poly variable() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  std::optional<unsigned> degree() const;
  GaussianRational coeff(unsigned k) const;
  const std::vector<GaussianRational>& coeffs() const { return c_; }
  unsigned term_count() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const GaussianRational& s, Poly p);

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const;
  GaussianRational eval(const GaussianRational& t) const;

  /* p.compose(q) = p(q(x)). */
  Poly compose(const Poly& inner) const;

  /* (c, k) when the polynomial is exactly c*x^k with c != 0; empty otherwise. */
  std::optional<std::pair<GaussianRational, unsigned>> as_monomial() const;

  /* True when x^n divides the polynomial; the zero polynomial is divisible by
     every power. */
  bool divisible_by_power(unsigned n) const;

  /* Human form like "x^2-1/2x+4", used in error details and text output. */
  std::string to_string() const;

private:
  void normalize();

  std::vector<GaussianRational> c_;
};

/* Parses "3x^2-1/2x+4", "x", "(1/2+1 i)x^3", "2". Coefficients with an
   imaginary part must be parenthesized; '*' between coefficient and x is
   optional. */
Poly parse_poly(std::string_view text);

}  // namespace hcfam
