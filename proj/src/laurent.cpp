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

#include "hcfam/laurent.hpp"

#include <algorithm>

namespace hcfam {

LaurentPoly::LaurentPoly(const Poly& p) : offset_(0), c_(p.coeffs()) { normalize(); }

LaurentPoly::LaurentPoly(int offset, std::vector<GaussianRational> coeffs)
    : offset_(offset), c_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(const GaussianRational& c, int k) {
  LaurentPoly p;
  if (!c.is_zero()) {
    p.offset_ = k;
    p.c_.push_back(c);
  }
  return p;
}

void LaurentPoly::normalize() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    offset_ = 0;
    return;
  }
  size_t tail = c_.size();
  while (tail > lead && c_[tail - 1].is_zero()) --tail;
  if (lead > 0 || tail < c_.size()) {
    c_ = std::vector<GaussianRational>(c_.begin() + static_cast<long>(lead),
                                       c_.begin() + static_cast<long>(tail));
    offset_ += static_cast<int>(lead);
  }
}

GaussianRational LaurentPoly::coeff(int k) const {
  if (c_.empty() || k < offset_ || k > max_exp()) return 0;
  return c_[static_cast<size_t>(k - offset_)];
}

unsigned LaurentPoly::term_count() const {
  unsigned n = 0;
  for (const auto& c : c_)
    if (!c.is_zero()) ++n;
  return n;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(*this);
  for (auto& c : p.c_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(offset_, o.offset_);
  int hi = std::max(max_exp(), o.max_exp());
  std::vector<GaussianRational> sum(static_cast<size_t>(hi - lo + 1), GaussianRational(0));
  for (size_t j = 0; j < c_.size(); ++j) sum[static_cast<size_t>(offset_ - lo) + j] += c_[j];
  for (size_t j = 0; j < o.c_.size(); ++j) sum[static_cast<size_t>(o.offset_ - lo) + j] += o.c_[j];
  offset_ = lo;
  c_ = std::move(sum);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly p;
  p.offset_ = a.offset_ + b.offset_;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, GaussianRational(0));
  for (size_t j = 0; j < a.c_.size(); ++j) {
    if (a.c_[j].is_zero()) continue;
    for (size_t k = 0; k < b.c_.size(); ++k) p.c_[j + k] += a.c_[j] * b.c_[k];
  }
  p.normalize();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const GaussianRational& s, LaurentPoly p) {
  for (auto& c : p.c_) c *= s;
  p.normalize();
  return p;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
  LaurentPoly p;
  if (is_zero()) return p;
  p.offset_ = -max_exp();
  p.c_.assign(c_.rbegin(), c_.rend());
  return p;  // already normal: reversal keeps ends nonzero
}

Poly LaurentPoly::to_poly() const {
  if (is_zero()) return {};
  if (offset_ < 0) throw DomainError("NegativeExponent", "Laurent value is not a polynomial");
  std::vector<GaussianRational> coeffs(static_cast<size_t>(offset_), GaussianRational(0));
  coeffs.insert(coeffs.end(), c_.begin(), c_.end());
  return Poly(std::move(coeffs));
}

std::optional<std::pair<GaussianRational, int>> LaurentPoly::as_monomial() const {
  if (is_zero() || term_count() != 1) return std::nullopt;
  return std::make_pair(c_.back(), max_exp());
}

LaurentPoly LaurentPoly::unit_inverse() const {
  auto m = as_monomial();
  if (!m) throw DomainError("NotUnit", "Laurent value is not a unit");
  return monomial(m->first.inv(), -m->second);
}

GaussianRational LaurentPoly::eval(const GaussianRational& t) const {
  if (is_zero()) return 0;
  if (offset_ < 0 && t.is_zero()) throw DivisionByZero("negative exponent evaluated at 0");
  GaussianRational acc(0);
  for (size_t j = c_.size(); j-- > 0;) acc = acc * t + c_[j];
  return acc * t.pow(offset_);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t j = c_.size(); j-- > 0;) {
    const auto& c = c_[j];
    if (c.is_zero()) continue;
    int k = offset_ + static_cast<int>(j);
    std::string cs = hcfam::to_string(c);
    bool wrap = !c.is_real() && c.re() != 0;
    if (!out.empty() && cs.front() != '-') out += '+';
    if (k == 0) {
      out += wrap ? "(" + cs + ")" : cs;
      continue;
    }
    if (c.is_one()) {
    } else if (c == GaussianRational(-1)) {
      out += '-';
    } else {
      out += wrap || !c.is_real() ? "(" + cs + ")" : cs;
    }
    out += 'x';
    if (k != 1) out += '^' + std::to_string(k);
  }
  return out;
}

}  // namespace hcfam
