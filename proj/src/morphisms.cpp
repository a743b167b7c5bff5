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

#include "hcfam/morphisms.hpp"

namespace hcfam {

PairMorphism::PairMorphism(unsigned m_, unsigned n_, GaussianRational c_, int k_, int s_,
                           bool localized_)
    : m(m_), n(n_), c(std::move(c_)), k(k_), s(s_), localized(localized_) {
  if (c.is_zero())
    throw DomainError("ZeroScale", "parametric morphisms have nonzero scale; use ZeroMorphism");
  if (s != 1 && s != -1) throw DomainError("BadSign", "sign must be +1 or -1");
  if (!localized) {
    if (m < n)
      throw DomainError("EmptyHom", "no nonzero affine morphisms g(m) -> g(n) with m < n");
    if (k < 0 || k > static_cast<int>(m - n))
      throw DomainError("ExponentRange", "k must lie in {0, ..., m-n}");
  }
}

HomSpace hom_space(unsigned m, unsigned n, bool localized) {
  HomSpace h{m, n, localized, false, std::nullopt, std::nullopt};
  if (!localized) {
    if (m < n) {
      h.zero_only = true;
    } else {
      h.k_min = 0;
      h.k_max = static_cast<int>(m - n);
    }
  }
  return h;
}

namespace {

FamilyPtr domain_family(unsigned n, bool localized) {
  FamilyPtr g = make_g(n);
  return localized ? localize(g) : g;
}

}  // namespace

FamilyElement apply(const PairMorphism& psi, const FamilyElement& v) {
  FamilyPtr source = domain_family(psi.m, psi.localized);
  if (*v.family() != *source) throw FamilyMismatch("element does not live in the morphism's source");
  FamilyPtr target = domain_family(psi.n, psi.localized);

  int diff = static_cast<int>(psi.m) - static_cast<int>(psi.n);
  LaurentPoly fx = LaurentPoly::monomial(psi.c, psi.k);
  LaurentPoly fy = LaurentPoly::monomial(psi.c.inv(), diff - psi.k);

  const auto& in = v.coords();
  std::vector<LaurentPoly> out(3);
  if (psi.s == 1) {
    out[0] = fy * in[0];
    out[1] = in[1];
    out[2] = fx * in[2];
  } else {
    out[0] = fx * in[2];
    out[2] = fy * in[0];
    out[1] = -in[1];
  }
  return {target, std::move(out)};
}

RawPairMap raw_images(const PairMorphism& psi) {
  FamilyPtr source = domain_family(psi.m, psi.localized);
  return RawPairMap{psi.m, psi.n, psi.s, psi.localized,
                    {apply(psi, FamilyElement::basis(source, 0)),
                     apply(psi, FamilyElement::basis(source, 1)),
                     apply(psi, FamilyElement::basis(source, 2))}};
}

VerifyReport verify_morphism(const RawPairMap& map) {
  VerifyReport report{true, {}};
  auto fail = [&](const std::string& msg) {
    report.ok = false;
    report.violations.push_back(msg);
  };

  if (map.s != 1 && map.s != -1) {
    fail("group part must be k(z) -> k(z^s) with s = +1 or -1");
    return report;
  }

  FamilyPtr source = domain_family(map.m, map.localized);
  FamilyPtr target = domain_family(map.n, map.localized);
  for (const auto& img : map.images)
    if (*img.family() != *target) {
      fail("images do not live in the declared target family");
      return report;
    }

  const char* names[3] = {"Y", "H", "X"};

  // twisted equivariance: a weight-w vector must land in the weight s*w piece
  for (unsigned i = 0; i < 3; ++i) {
    int w = source->weights()[i];
    if (!map.images[i].homogeneous_of_weight(map.s * w))
      fail(std::string("equivariance fails on ") + names[i]);
  }

  // compatibility with the embeddings of Lie(SO(2)): H -> s H
  FamilyElement h_target = FamilyElement::basis(target, target->h_index());
  if (map.images[1] != GaussianRational(map.s) * h_target)
    fail("embedding compatibility fails: H must map to s * H");

  // bracket preservation on basis pairs, extended base-linearly
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = i + 1; j < 3; ++j) {
      auto lhs = FamilyElement::zero(target);
      auto coords = source->bracket_coords(i, j);
      for (unsigned q = 0; q < 3; ++q) lhs += coords[q] * map.images[q];
      auto rhs = bracket(map.images[i], map.images[j]);
      if (lhs != rhs)
        fail(std::string("bracket preservation fails on [") + names[i] + ", " + names[j] + "]");
    }

  return report;
}

VerifyReport verify_morphism(const PairMorphism& psi) { return verify_morphism(raw_images(psi)); }

std::optional<Morphism> fit_parametric(const RawPairMap& map) {
  bool all_zero = map.images[0].is_zero() && map.images[1].is_zero() && map.images[2].is_zero();
  if (all_zero) return Morphism(ZeroMorphism{map.m, map.n, map.localized});

  VerifyReport report = verify_morphism(map);
  if (!report.ok)
    throw DomainError("NotMorphism", "cannot fit parameters: " + report.violations.front());

  // X lands on the weight 2s line as a monomial c x^k
  unsigned x_slot = map.s == 1 ? 2 : 0;
  auto cx = map.images[2].coords()[x_slot].as_monomial();
  if (!cx)
    throw DomainError("NotMorphism", "image of X is not a monomial multiple of a basis vector");
  PairMorphism psi(map.m, map.n, cx->first, cx->second, map.s, map.localized);
  RawPairMap expected = raw_images(psi);
  if (!(expected.images[0] == map.images[0] && expected.images[1] == map.images[1] &&
        expected.images[2] == map.images[2]))
    throw DomainError("NotMorphism", "images are not of the parametric form");
  return Morphism(psi);
}

PairMorphism compose(const PairMorphism& phi, const PairMorphism& psi) {
  if (phi.localized != psi.localized)
    throw ChainMismatch("cannot compose affine and localized morphisms");
  if (phi.n != psi.m)
    throw ChainMismatch("target of the first morphism differs from source of the second");
  int np = static_cast<int>(psi.m) - static_cast<int>(psi.n);
  if (phi.s == 1) return {phi.m, psi.n, phi.c * psi.c, phi.k + psi.k, psi.s, phi.localized};
  return {phi.m, psi.n, phi.c / psi.c, phi.k + np - psi.k, -psi.s, phi.localized};
}

Morphism compose(const Morphism& phi, const Morphism& psi) {
  auto meta = [](const Morphism& m) {
    if (std::holds_alternative<ZeroMorphism>(m)) {
      const auto& z = std::get<ZeroMorphism>(m);
      return std::tuple<unsigned, unsigned, bool>{z.m, z.n, z.localized};
    }
    const auto& p = std::get<PairMorphism>(m);
    return std::tuple<unsigned, unsigned, bool>{p.m, p.n, p.localized};
  };
  auto [m1, n1, loc1] = meta(phi);
  auto [m2, n2, loc2] = meta(psi);
  if (loc1 != loc2) throw ChainMismatch("cannot compose affine and localized morphisms");
  if (n1 != m2) throw ChainMismatch("target of the first morphism differs from source of the second");
  if (std::holds_alternative<ZeroMorphism>(phi) || std::holds_alternative<ZeroMorphism>(psi))
    return ZeroMorphism{m1, n2, loc1};
  return compose(std::get<PairMorphism>(phi), std::get<PairMorphism>(psi));
}

FamilyPtr pullback(const GradedFamily& f, const Poly& mu) {
  if (f.base() != BaseRing::Affine)
    throw DomainError("NotAffine", "pullback substitutes into an affine family");
  BracketTable table;
  for (const auto& [key, coords] : f.table()) {
    std::vector<LaurentPoly> out(coords.size());
    for (size_t q = 0; q < coords.size(); ++q)
      out[q] = LaurentPoly(coords[q].to_poly().compose(mu));
    table[key] = std::move(out);
  }
  return new_family(f.rank(), f.base(), f.weights(), f.h_index(), std::move(table),
                    f.basis_names());
}

PairMorphism embed_in_constant(unsigned n) { return {n, 0, 1, 0, 1, false}; }

}  // namespace hcfam
