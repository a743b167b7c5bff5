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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcfam/poly.hpp"

namespace hcfam {

/* Laurent polynomial over Q(i): coeffs()[j] is the coefficient of
   x^(offset()+j). Normal form: zero stores nothing with offset 0; otherwise
   the first and last stored coefficients are nonzero. */
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(const GaussianRational& c) : LaurentPoly(Poly(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Poly(c)) {}                      // NOLINT(google-explicit-constructor)
  LaurentPoly(const Poly& p);                                       // NOLINT(google-explicit-constructor)
  LaurentPoly(int offset, std::vector<GaussianRational> coeffs);

  static LaurentPoly monomial(const GaussianRational& c, int k);

  bool is_zero() const { return c_.empty(); }
  int offset() const { return offset_; }
  const std::vector<GaussianRational>& coeffs() const { return c_; }

  /* Exponent range of the support; only valid on nonzero values. */
  int min_exp() const { return offset_; }
  int max_exp() const { return offset_ + static_cast<int>(c_.size()) - 1; }

  GaussianRational coeff(int k) const;
  unsigned term_count() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const GaussianRational& s, LaurentPoly p);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.offset_ == b.offset_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /* The ring involution x -> 1/x. */
  LaurentPoly substitute_inverse() const;

  bool is_polynomial() const { return c_.empty() || offset_ >= 0; }
  Poly to_poly() const;

  /* (c, k) when the value is exactly c*x^k, c != 0. */
  std::optional<std::pair<GaussianRational, int>> as_monomial() const;

  /* Units of Q(i)[x, 1/x] are the nonzero monomials. */
  bool is_unit() const { return as_monomial().has_value(); }
  LaurentPoly unit_inverse() const;

  bool divisible_by_power(int n) const { return is_zero() || offset_ >= n; }

  /* Needs t != 0 when negative exponents are present. */
  GaussianRational eval(const GaussianRational& t) const;

  std::string to_string() const;

private:
  void normalize();

  int offset_ = 0;
  std::vector<GaussianRational> c_;
};

}  // namespace hcfam
