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

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "hcfam/errors.hpp"

namespace hcfam {

/* Arbitrary-precision rational, always kept canonical (lowest terms, positive
   denominator). GMP canonicalizes through arithmetic; construction from raw
   numerator/denominator goes through make_rational below. */
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/* Element of Q(i). Both parts are canonical Rationals. */
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(int n) : re_(n), im_(0) {}            // NOLINT(google-explicit-constructor)
  GaussianRational(long n) : re_(n), im_(0) {}           // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  /* re^2 + im^2; zero iff the number is zero. */
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational inv() const;
  GaussianRational pow(long e) const;

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
  Rational re_, im_;
};

/* Canonical text form: "a/b", "a/b+c/d i", "c/d i", denominator 1 omitted,
   e.g. "-3/2+1/4 i", "15", "-2 i", "0". parse_scalar accepts the same grammar
   with optional whitespace and a bare "i". */
std::string to_string(const GaussianRational& q);
GaussianRational parse_scalar(std::string_view text);

}  // namespace hcfam
