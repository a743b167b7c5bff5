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

#include "hcfam/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace hcfam {

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

GaussianRational GaussianRational::inv() const {
  Rational n = norm();
  if (n == 0) throw DivisionByZero("inverse of zero in Q(i)");
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(long e) const {
  GaussianRational base = e < 0 ? inv() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  GaussianRational acc(1);
  while (k > 0) {
    if (k & 1u) acc *= base;
    base *= base;
    k >>= 1u;
  }
  return acc;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inv();
}

std::string to_string(const GaussianRational& q) {
  if (q.is_zero()) return "0";
  std::string out;
  if (q.re() != 0) out = q.re().get_str();
  if (q.im() != 0) {
    if (q.im() > 0 && !out.empty()) out += '+';
    out += q.im().get_str();
    out += " i";
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
};

// digits [/ digits], no sign
Rational parse_unsigned_rational(Cursor& c) {
  size_t start = c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.pos == start) throw ParseError("expected digits in scalar");
  std::string num(c.s.substr(start, c.pos - start));
  std::string den = "1";
  if (!c.done() && c.peek() == '/') {
    ++c.pos;
    size_t dstart = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == dstart) throw ParseError("expected denominator digits in scalar");
    den = std::string(c.s.substr(dstart, c.pos - dstart));
  }
  Rational q;
  if (q.set_str(num + "/" + den, 10) != 0) throw ParseError("bad rational literal");
  if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
  q.canonicalize();
  return q;
}

// [sign] (rational ["i"] | "i")
struct Term {
  Rational value;
  bool imaginary;
};

Term parse_term(Cursor& c) {
  c.skip_ws();
  int sign = 1;
  if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
    if (c.peek() == '-') sign = -1;
    ++c.pos;
    c.skip_ws();
  }
  if (c.done()) throw ParseError("truncated scalar");
  Term t{Rational(1), false};
  if (c.peek() == 'i') {
    ++c.pos;
    t.imaginary = true;
  } else {
    t.value = parse_unsigned_rational(c);
    c.skip_ws();
    if (!c.done() && c.peek() == 'i') {
      ++c.pos;
      t.imaginary = true;
    }
  }
  if (sign < 0) t.value = -t.value;
  return t;
}

}  // namespace

GaussianRational parse_scalar(std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  if (c.done()) throw ParseError("empty scalar");

  Rational re(0), im(0);
  bool have_re = false, have_im = false;
  for (int terms = 0; terms < 2; ++terms) {
    Term t = parse_term(c);
    if (t.imaginary) {
      if (have_im) throw ParseError("repeated imaginary part in scalar");
      im = t.value;
      have_im = true;
    } else {
      if (have_re || have_im) throw ParseError("real part must precede imaginary part");
      re = t.value;
      have_re = true;
    }
    c.skip_ws();
    if (c.done()) break;
    if (c.peek() != '+' && c.peek() != '-') throw ParseError("trailing garbage in scalar");
  }
  c.skip_ws();
  if (!c.done()) throw ParseError("trailing garbage in scalar");
  return {re, im};
}

}  // namespace hcfam
