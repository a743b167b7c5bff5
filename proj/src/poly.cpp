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

#include "hcfam/poly.hpp"

#include <algorithm>
#include <cctype>

namespace hcfam {

Poly::Poly(const GaussianRational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::initializer_list<GaussianRational> coeffs) : c_(coeffs) { normalize(); }

Poly::Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(const GaussianRational& c, unsigned k) {
  Poly p;
  if (!c.is_zero()) {
    p.c_.assign(k + 1, GaussianRational(0));
    p.c_[k] = c;
  }
  return p;
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<unsigned> Poly::degree() const {
  if (c_.empty()) return std::nullopt;
  return static_cast<unsigned>(c_.size() - 1);
}

GaussianRational Poly::coeff(unsigned k) const {
  if (k >= c_.size()) return 0;
  return c_[k];
}

unsigned Poly::term_count() const {
  unsigned n = 0;
  for (const auto& c : c_)
    if (!c.is_zero()) ++n;
  return n;
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (auto& c : p.c_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly p;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, GaussianRational(0));
  for (size_t j = 0; j < a.c_.size(); ++j) {
    if (a.c_[j].is_zero()) continue;
    for (size_t k = 0; k < b.c_.size(); ++k) p.c_[j + k] += a.c_[j] * b.c_[k];
  }
  p.normalize();
  return p;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const GaussianRational& s, Poly p) {
  for (auto& c : p.c_) c *= s;
  p.normalize();
  return p;
}

Poly Poly::derivative() const {
  Poly p;
  for (size_t k = 1; k < c_.size(); ++k) p.c_.push_back(GaussianRational(static_cast<long>(k)) * c_[k]);
  p.normalize();
  return p;
}

GaussianRational Poly::eval(const GaussianRational& t) const {
  GaussianRational acc(0);
  for (size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * inner + Poly(c_[k]);
  return acc;
}

std::optional<std::pair<GaussianRational, unsigned>> Poly::as_monomial() const {
  if (is_zero() || term_count() != 1) return std::nullopt;
  return std::make_pair(c_.back(), static_cast<unsigned>(c_.size() - 1));
}

bool Poly::divisible_by_power(unsigned n) const {
  for (size_t k = 0; k < std::min<size_t>(n, c_.size()); ++k)
    if (!c_[k].is_zero()) return false;
  return true;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t k = c_.size(); k-- > 0;) {
    const auto& c = c_[k];
    if (c.is_zero()) continue;
    std::string cs = hcfam::to_string(c);
    bool needs_parens = !c.is_real() && c.re() != 0;
    if (!out.empty() && cs.front() != '-') out += '+';
    if (k == 0) {
      out += needs_parens ? "(" + cs + ")" : cs;
      continue;
    }
    if (c.is_one()) {
      // coefficient 1 is implicit
    } else if (c == GaussianRational(-1)) {
      out += '-';
    } else {
      out += needs_parens || !c.is_real() ? "(" + cs + ")" : cs;
    }
    out += 'x';
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

namespace {

struct PCursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
};

}  // namespace

Poly parse_poly(std::string_view text) {
  PCursor c{text};
  c.skip_ws();
  if (c.done()) throw ParseError("empty polynomial");
  Poly result;
  bool first = true;
  while (true) {
    c.skip_ws();
    if (c.done()) break;
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = -1;
      ++c.pos;
      c.skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between polynomial terms");
    }
    if (c.done()) throw ParseError("truncated polynomial");

    GaussianRational coeff(1);
    bool have_coeff = false;
    if (c.peek() == '(') {
      size_t close = c.s.find(')', c.pos);
      if (close == std::string_view::npos) throw ParseError("unbalanced parenthesis in polynomial");
      coeff = parse_scalar(c.s.substr(c.pos + 1, close - c.pos - 1));
      c.pos = close + 1;
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      size_t start = c.pos;
      while (!c.done() && (std::isdigit(static_cast<unsigned char>(c.peek())) || c.peek() == '/')) ++c.pos;
      coeff = parse_scalar(c.s.substr(start, c.pos - start));
      have_coeff = true;
    }
    c.skip_ws();
    if (!c.done() && c.peek() == '*') {
      ++c.pos;
      c.skip_ws();
    }

    unsigned exp = 0;
    if (!c.done() && c.peek() == 'x') {
      ++c.pos;
      exp = 1;
      if (!c.done() && c.peek() == '^') {
        ++c.pos;
        size_t start = c.pos;
        while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
        if (c.pos == start) throw ParseError("expected exponent digits");
        exp = static_cast<unsigned>(std::stoul(std::string(c.s.substr(start, c.pos - start))));
      }
    } else if (!have_coeff) {
      throw ParseError("expected coefficient or 'x' in polynomial term");
    }

    if (sign < 0) coeff = -coeff;
    result += Poly::monomial(coeff, exp);
    first = false;
  }
  return result;
}

}  // namespace hcfam
