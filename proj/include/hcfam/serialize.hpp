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

// JSON wire formats. Scalars are strings ("a/b", "a/b+c/d i"), polynomials are
// arrays of scalar strings by ascending degree, Laurent values are
// {"offset": e, "coeffs": [...]}. Emission is canonical: parse then emit is
// the identity on canonical files.

#pragma once

#include <string>

#include "json.hpp"

#include "hcfam/catalog.hpp"
#include "hcfam/classify.hpp"
#include "hcfam/envalg.hpp"
#include "hcfam/errors.hpp"
#include "hcfam/morphisms.hpp"
#include "hcfam/projline.hpp"

namespace hcfam {

using Json = nlohmann::ordered_json;

// Canonical rendering: two-space indent, trailing newline.
std::string dump_json(const Json& j);

// nlohmann parse errors rebranded as ParseError.
Json parse_json_text(const std::string& text);

std::string read_file(const std::string& path);           // ParseError on failure
void write_file(const std::string& path, const std::string& data);

Json scalar_to_json(const GaussianRational& s);
GaussianRational json_to_scalar(const Json& j);

Json poly_to_json(const Poly& p);
Poly json_to_poly(const Json& j);

// Affine coordinates serialize as polynomial arrays, punctured ones as
// Laurent objects; parsing accepts either shape for either base.
Json coord_to_json(const LaurentPoly& c, BaseRing base);
LaurentPoly json_to_coord(const Json& j);

Json family_to_json(const GradedFamily& f);
// Accepts (and ignores) the optional "embedding" key emitted for subfamilies.
FamilyPtr json_to_family(const Json& j);

Json embedded_family_to_json(const EmbeddedFamily& e);

Json element_to_json(const FamilyElement& v);
FamilyElement json_to_element(const Json& j);

Json morphism_to_json(const Morphism& m);
Morphism json_to_morphism(const Json& j);

// "m,n,c,k,s" with c in scalar text form, e.g. "3,1,2,1,-1".
Morphism parse_morphism_compact(const std::string& text, bool localized);

Json hom_to_json(const HomSpace& h);
Json classification_to_json(const ClassificationResult& r);
Json invariants_to_json(const FiberInvariants& inv, const GaussianRational& t);
Json pbw_to_json(const PBWElement& u);
Json p1_to_json(const P1Extension& e);
Json splitting_to_json(const P1Extension& e);  // {"splitting": [...], "h0_dim": N}
Json sections_to_json(const P1Extension& e, const SectionSpace& s);

Json error_to_json(const DomainError& err);

}  // namespace hcfam
