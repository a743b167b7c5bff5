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

#include "hcfam/envalg.hpp"

#include <algorithm>
#include <utility>

#include "hcfam/errors.hpp"
#include "hcfam/linalg.hpp"

namespace hcfam {

PBWElement::PBWElement(unsigned n, const Poly& scalar) : n_(n) { add_term(PBWMono{}, scalar); }

PBWElement PBWElement::generator(unsigned n, Gen g) {
  PBWElement e(n);
  PBWMono m;
  switch (g) {
    case Gen::Y: m.y = 1; break;
    case Gen::H: m.h = 1; break;
    case Gen::X: m.x = 1; break;
  }
  e.add_term(m, Poly(1));
  return e;
}

Poly PBWElement::coefficient(const PBWMono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Poly() : it->second;
}

unsigned PBWElement::pbw_degree() const {
  unsigned d = 0;
  for (const auto& [m, p] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void PBWElement::add_term(const PBWMono& m, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

PBWElement PBWElement::operator-() const {
  PBWElement out(n_);
  for (const auto& [m, p] : terms_) out.terms_.emplace(m, -p);
  return out;
}

PBWElement& PBWElement::operator+=(const PBWElement& rhs) {
  if (n_ != rhs.n_) throw FamilyMismatch("enveloping-algebra elements have different parameters");
  for (const auto& [m, p] : rhs.terms_) add_term(m, p);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& rhs) {
  if (n_ != rhs.n_) throw FamilyMismatch("enveloping-algebra elements have different parameters");
  for (const auto& [m, p] : rhs.terms_) add_term(m, -p);
  return *this;
}

PBWElement& PBWElement::operator*=(const Poly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, p] : terms_) p *= scalar;
  return *this;
}

namespace {

using Word = std::vector<Gen>;

void append_letters(Word& w, Gen g, unsigned count) {
  for (unsigned i = 0; i < count; ++i) w.push_back(g);
}

// Straightens coeff * w into PBW normal form and accumulates it onto out.
// Each rewrite either removes one adjacent inversion or strictly shortens the
// word, so the work stack drains.
void straighten(unsigned n, Poly coeff, Word word, PBWElement& out) {
  std::vector<std::pair<Poly, Word>> stack;
  stack.emplace_back(std::move(coeff), std::move(word));
  while (!stack.empty()) {
    auto [p, w] = std::move(stack.back());
    stack.pop_back();

    size_t i = 0;
    bool sorted = true;
    for (; i + 1 < w.size(); ++i)
      if (static_cast<int>(w[i]) > static_cast<int>(w[i + 1])) {
        sorted = false;
        break;
      }
    if (sorted) {
      PBWMono m;
      for (Gen g : w) {
        if (g == Gen::Y) ++m.y;
        else if (g == Gen::H) ++m.h;
        else ++m.x;
      }
      out.add_term(m, p);
      continue;
    }

    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);

    if (w[i] == Gen::X && w[i + 1] == Gen::Y) {
      // X Y = Y X + x^n H
      Word rem(w.begin(), w.begin() + i);
      rem.push_back(Gen::H);
      rem.insert(rem.end(), w.begin() + i + 2, w.end());
      stack.emplace_back(Poly::monomial(1, n) * p, std::move(rem));
    } else if (w[i] == Gen::X && w[i + 1] == Gen::H) {
      // X H = H X - 2 X
      Word rem = w;
      rem.erase(rem.begin() + i + 1);
      stack.emplace_back(GaussianRational(-2) * p, std::move(rem));
    } else {
      // H Y = Y H - 2 Y
      Word rem = w;
      rem.erase(rem.begin() + i);
      stack.emplace_back(GaussianRational(-2) * p, std::move(rem));
    }
    stack.emplace_back(std::move(p), std::move(swapped));
  }
}

}  // namespace

PBWElement pbw_mul(const PBWElement& a, const PBWElement& b) {
  if (a.n_ != b.n_) throw FamilyMismatch("enveloping-algebra elements have different parameters");
  PBWElement out(a.n_);
  for (const auto& [ma, pa] : a.terms_)
    for (const auto& [mb, pb] : b.terms_) {
      Word w;
      w.reserve(ma.total_degree() + mb.total_degree());
      append_letters(w, Gen::Y, ma.y);
      append_letters(w, Gen::H, ma.h);
      append_letters(w, Gen::X, ma.x);
      append_letters(w, Gen::Y, mb.y);
      append_letters(w, Gen::H, mb.h);
      append_letters(w, Gen::X, mb.x);
      straighten(a.n_, pa * pb, std::move(w), out);
    }
  return out;
}

PBWElement commutator(const PBWElement& a, const PBWElement& b) {
  return pbw_mul(a, b) - pbw_mul(b, a);
}

PBWElement casimir(unsigned n) {
  PBWElement Y = PBWElement::generator(n, Gen::Y);
  PBWElement H = PBWElement::generator(n, Gen::H);
  PBWElement X = PBWElement::generator(n, Gen::X);
  Poly eighth_xn = Poly::monomial(GaussianRational(make_rational(1, 8)), n);
  Poly quarter = Poly(GaussianRational(make_rational(1, 4)));
  return eighth_xn * pbw_mul(H, H) + quarter * (pbw_mul(X, Y) + pbw_mul(Y, X));
}

CenterProbeResult center_probe(unsigned n, unsigned pbw_degree, unsigned coeff_degree) {
  std::vector<PBWMono> monos;
  for (unsigned y = 0; y <= pbw_degree; ++y)
    for (unsigned h = 0; y + h <= pbw_degree; ++h)
      for (unsigned x = 0; y + h + x <= pbw_degree; ++x) monos.push_back({y, h, x});

  const unsigned shifts = coeff_degree + 1;
  const unsigned cols = static_cast<unsigned>(monos.size()) * shifts;

  // [x^j M, G] = x^j [M, G], so only the commutators of bare monomials are
  // computed; the x^j shift moves into the output coefficient index.
  const Gen gens[3] = {Gen::Y, Gen::H, Gen::X};
  std::vector<std::array<PBWElement, 3>> brackets;
  brackets.reserve(monos.size());
  for (const auto& m : monos) {
    PBWElement e(n);
    e.add_term(m, Poly(1));
    brackets.push_back({commutator(e, PBWElement::generator(n, gens[0])),
                        commutator(e, PBWElement::generator(n, gens[1])),
                        commutator(e, PBWElement::generator(n, gens[2]))});
  }

  // Output coordinates (g, M', j') are discovered on the fly.
  std::map<std::tuple<unsigned, PBWMono, unsigned>, unsigned> row_of;
  std::vector<std::tuple<unsigned, unsigned, GaussianRational>> triplets;
  for (unsigned mi = 0; mi < monos.size(); ++mi)
    for (unsigned j = 0; j < shifts; ++j) {
      unsigned col = mi * shifts + j;
      for (unsigned g = 0; g < 3; ++g)
        for (const auto& [m2, poly] : brackets[mi][g].terms()) {
          const auto& cs = poly.coeffs();
          for (unsigned d = 0; d < cs.size(); ++d) {
            if (cs[d].is_zero()) continue;
            auto key = std::make_tuple(g, m2, d + j);
            auto [it, inserted] = row_of.emplace(key, static_cast<unsigned>(row_of.size()));
            triplets.emplace_back(it->second, col, cs[d]);
          }
        }
    }

  QMatrix A(static_cast<unsigned>(row_of.size()), cols);
  for (const auto& [r, c, v] : triplets) A.at(r, c) += v;

  std::vector<QVector> null_basis = A.nullspace();

  CenterProbeResult result;
  result.pbw_degree = pbw_degree;
  result.coeff_degree = coeff_degree;
  for (const auto& v : null_basis) {
    PBWElement u(n);
    for (unsigned col = 0; col < cols; ++col) {
      if (v[col].is_zero()) continue;
      u.add_term(monos[col / shifts], Poly::monomial(v[col], col % shifts));
    }
    result.basis.push_back(std::move(u));
  }
  result.dimension = static_cast<unsigned>(result.basis.size());
  return result;
}

namespace {

std::string mono_string(const PBWMono& m) {
  if (m.total_degree() == 0) return "1";
  std::string s;
  auto put = [&](const char* name, unsigned e) {
    if (e == 0) return;
    if (!s.empty()) s += ' ';
    s += name;
    if (e > 1) s += '^' + std::to_string(e);
  };
  put("Y", m.y);
  put("H", m.h);
  put("X", m.x);
  return s;
}

}  // namespace

std::string PBWElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, p] : terms_) {
    if (!s.empty()) s += " + ";
    std::string coeff = p.to_string();
    bool trivial = (p == Poly(1));
    if (m.total_degree() == 0) {
      s += coeff;
      continue;
    }
    if (!trivial) {
      if (p.term_count() > 1)
        s += '(' + coeff + ") ";
      else
        s += coeff + ' ';
    }
    s += mono_string(m);
  }
  return s;
}

}  // namespace hcfam
