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

#include "hcfam/serialize.hpp"

#include <fstream>
#include <sstream>

namespace hcfam {

std::string dump_json(const Json& j) {
  // error messages may quote raw bytes from malformed input files
  return j.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("FileError", "cannot write file: " + path);
  out << data;
  if (!out) throw DomainError("FileError", "write failed: " + path);
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ParseError(message);
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed,
                         const char* what) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (key == a) known = true;
    require(known, std::string("unknown key \"") + key + "\" in " + what);
  }
}

unsigned get_unsigned(const Json& j, const char* what) {
  require(j.is_number_integer() && (j.is_number_unsigned() || j.get<long long>() >= 0),
          std::string(what) + " must be a nonnegative integer");
  return j.get<unsigned>();
}

int get_int(const Json& j, const char* what) {
  require(j.is_number_integer(), std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Json scalar_to_json(const GaussianRational& s) { return Json(to_string(s)); }

GaussianRational json_to_scalar(const Json& j) {
  require(j.is_string(), "scalar must be a string");
  return parse_scalar(j.get<std::string>());
}

Json poly_to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(scalar_to_json(c));
  return arr;
}

Poly json_to_poly(const Json& j) {
  require(j.is_array(), "polynomial must be an array of scalar strings");
  std::vector<GaussianRational> cs;
  cs.reserve(j.size());
  for (const auto& item : j) cs.push_back(json_to_scalar(item));
  return Poly(std::move(cs));
}

Json coord_to_json(const LaurentPoly& c, BaseRing base) {
  if (base == BaseRing::Affine) return poly_to_json(c.to_poly());
  Json obj = Json::object();
  obj["offset"] = c.offset();
  Json arr = Json::array();
  for (const auto& s : c.coeffs()) arr.push_back(scalar_to_json(s));
  obj["coeffs"] = arr;
  return obj;
}

LaurentPoly json_to_coord(const Json& j) {
  if (j.is_array()) return LaurentPoly(json_to_poly(j));
  require(j.is_object(), "coordinate must be a polynomial array or a Laurent object");
  reject_unknown_keys(j, {"offset", "coeffs"}, "Laurent object");
  require(j.contains("offset") && j.contains("coeffs"),
          "Laurent object needs \"offset\" and \"coeffs\"");
  int offset = get_int(j["offset"], "offset");
  require(j["coeffs"].is_array(), "coeffs must be an array of scalar strings");
  std::vector<GaussianRational> cs;
  for (const auto& item : j["coeffs"]) cs.push_back(json_to_scalar(item));
  return {offset, std::move(cs)};
}

namespace {

std::string bracket_key(unsigned i, unsigned j) {
  return std::to_string(i) + "," + std::to_string(j);
}

std::pair<unsigned, unsigned> parse_bracket_key(const std::string& key) {
  auto comma = key.find(',');
  require(comma != std::string::npos && comma > 0 && comma + 1 < key.size(),
          "bracket key must have the form \"i,j\"");
  auto parse_index = [](const std::string& part) {
    require(!part.empty(), "bracket key must have the form \"i,j\"");
    unsigned value = 0;
    for (char ch : part) {
      require(ch >= '0' && ch <= '9', "bracket key must have the form \"i,j\"");
      value = value * 10 + static_cast<unsigned>(ch - '0');
    }
    return value;
  };
  return {parse_index(key.substr(0, comma)), parse_index(key.substr(comma + 1))};
}

std::vector<std::string> names_or_default(const GradedFamily& f) {
  if (!f.basis_names().empty()) return f.basis_names();
  std::vector<std::string> names;
  for (unsigned i = 0; i < f.rank(); ++i) names.push_back("e" + std::to_string(i));
  return names;
}

}  // namespace

Json family_to_json(const GradedFamily& f) {
  Json j = Json::object();
  j["rank"] = f.rank();
  j["base"] = f.base() == BaseRing::Affine ? "affine" : "punctured";
  j["basis"] = names_or_default(f);
  j["weights"] = f.weights();
  j["h_index"] = f.h_index();
  Json brackets = Json::object();
  for (const auto& [key, coords] : f.table()) {
    Json arr = Json::array();
    for (const auto& c : coords) arr.push_back(coord_to_json(c, f.base()));
    brackets[bracket_key(key.first, key.second)] = arr;
  }
  j["brackets"] = brackets;
  return j;
}

FamilyPtr json_to_family(const Json& j) {
  require(j.is_object(), "family must be a JSON object");
  reject_unknown_keys(j, {"rank", "base", "basis", "weights", "h_index", "brackets", "embedding"},
                      "family");
  for (const char* key : {"rank", "base", "basis", "weights", "h_index", "brackets"})
    require(j.contains(key), std::string("family is missing \"") + key + "\"");

  unsigned rank = get_unsigned(j["rank"], "rank");

  require(j["base"].is_string(), "base must be \"affine\" or \"punctured\"");
  std::string base_name = j["base"].get<std::string>();
  require(base_name == "affine" || base_name == "punctured",
          "base must be \"affine\" or \"punctured\"");
  BaseRing base = base_name == "affine" ? BaseRing::Affine : BaseRing::Punctured;

  require(j["basis"].is_array() && j["basis"].size() == rank,
          "basis must be an array of rank strings");
  std::vector<std::string> names;
  for (const auto& item : j["basis"]) {
    require(item.is_string(), "basis entries must be strings");
    names.push_back(item.get<std::string>());
  }

  require(j["weights"].is_array() && j["weights"].size() == rank,
          "weights must be an array of rank integers");
  std::vector<int> weights;
  for (const auto& item : j["weights"]) weights.push_back(get_int(item, "weight"));

  unsigned h_index = get_unsigned(j["h_index"], "h_index");
  require(h_index < rank, "h_index must designate a basis element");

  require(j["brackets"].is_object(), "brackets must be an object");
  BracketTable table;
  for (const auto& [key, value] : j["brackets"].items()) {
    auto indices = parse_bracket_key(key);
    require(value.is_array() && value.size() == rank,
            "bracket entries must be arrays of rank coordinates");
    std::vector<LaurentPoly> coords;
    for (const auto& item : value) coords.push_back(json_to_coord(item));
    require(table.emplace(indices, std::move(coords)).second, "duplicate bracket key");
  }

  return new_family(rank, base, std::move(weights), h_index, std::move(table), std::move(names));
}

Json embedded_family_to_json(const EmbeddedFamily& e) {
  Json j = family_to_json(*e.family);
  Json emb = Json::array();
  for (const auto& v : e.embedding) {
    Json coords = Json::array();
    for (const auto& c : v.coords()) coords.push_back(coord_to_json(c, v.family()->base()));
    emb.push_back(coords);
  }
  j["embedding"] = emb;
  return j;
}

Json element_to_json(const FamilyElement& v) {
  Json j = Json::object();
  j["family"] = family_to_json(*v.family());
  Json coords = Json::array();
  for (const auto& c : v.coords()) coords.push_back(coord_to_json(c, v.family()->base()));
  j["coords"] = coords;
  return j;
}

FamilyElement json_to_element(const Json& j) {
  require(j.is_object(), "element must be a JSON object");
  reject_unknown_keys(j, {"family", "coords"}, "element");
  require(j.contains("family") && j.contains("coords"),
          "element needs \"family\" and \"coords\"");
  FamilyPtr fam = json_to_family(j["family"]);
  require(j["coords"].is_array() && j["coords"].size() == fam->rank(),
          "coords must be an array of rank coordinates");
  std::vector<LaurentPoly> coords;
  for (const auto& item : j["coords"]) coords.push_back(json_to_coord(item));
  return {std::move(fam), std::move(coords)};
}

Json morphism_to_json(const Morphism& m) {
  Json j = Json::object();
  if (std::holds_alternative<ZeroMorphism>(m)) {
    const auto& z = std::get<ZeroMorphism>(m);
    j["m"] = z.m;
    j["n"] = z.n;
    j["zero"] = true;
    j["localized"] = z.localized;
    return j;
  }
  const auto& p = std::get<PairMorphism>(m);
  j["m"] = p.m;
  j["n"] = p.n;
  j["c"] = scalar_to_json(p.c);
  j["k"] = p.k;
  j["s"] = p.s;
  j["localized"] = p.localized;
  return j;
}

Morphism json_to_morphism(const Json& j) {
  require(j.is_object(), "morphism must be a JSON object");
  if (j.contains("zero")) {
    reject_unknown_keys(j, {"m", "n", "zero", "localized"}, "zero morphism");
    require(j["zero"].is_boolean() && j["zero"].get<bool>(), "\"zero\" must be true");
    require(j.contains("m") && j.contains("n"), "morphism needs \"m\" and \"n\"");
    bool localized = j.contains("localized") ? j["localized"].get<bool>() : false;
    return ZeroMorphism{get_unsigned(j["m"], "m"), get_unsigned(j["n"], "n"), localized};
  }
  reject_unknown_keys(j, {"m", "n", "c", "k", "s", "localized"}, "morphism");
  for (const char* key : {"m", "n", "c", "k", "s"})
    require(j.contains(key), std::string("morphism is missing \"") + key + "\"");
  bool localized = false;
  if (j.contains("localized")) {
    require(j["localized"].is_boolean(), "localized must be a boolean");
    localized = j["localized"].get<bool>();
  }
  return PairMorphism(get_unsigned(j["m"], "m"), get_unsigned(j["n"], "n"),
                      json_to_scalar(j["c"]), get_int(j["k"], "k"), get_int(j["s"], "s"),
                      localized);
}

Morphism parse_morphism_compact(const std::string& text, bool localized) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  require(parts.size() == 5, "morphism literal must be \"m,n,c,k,s\"");

  auto parse_index = [](const std::string& part, const char* what) -> unsigned {
    require(!part.empty(), std::string(what) + " must be a nonnegative integer");
    unsigned long value = 0;
    for (char ch : part) {
      require(ch >= '0' && ch <= '9', std::string(what) + " must be a nonnegative integer");
      value = value * 10 + static_cast<unsigned long>(ch - '0');
      require(value <= 1000000, std::string(what) + " is out of range");
    }
    return static_cast<unsigned>(value);
  };
  auto parse_integer = [&](const std::string& part, const char* what) -> int {
    std::string body = part;
    int sign = 1;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
      if (body[0] == '-') sign = -1;
      body.erase(body.begin());
    }
    return sign * static_cast<int>(parse_index(body, what));
  };

  unsigned m = parse_index(parts[0], "m");
  unsigned n = parse_index(parts[1], "n");
  GaussianRational c = parse_scalar(parts[2]);
  int k = parse_integer(parts[3], "k");
  int s = parse_integer(parts[4], "s");
  if (c.is_zero()) return ZeroMorphism{m, n, localized};
  return PairMorphism(m, n, std::move(c), k, s, localized);
}

Json hom_to_json(const HomSpace& h) {
  Json j = Json::object();
  if (h.zero_only) {
    j["zero"] = true;
    return j;
  }
  j["zero"] = false;
  if (h.k_min && h.k_max) {
    j["k_min"] = *h.k_min;
    j["k_max"] = *h.k_max;
  } else {
    j["k_unbounded"] = true;
  }
  return j;
}

Json classification_to_json(const ClassificationResult& r) {
  Json j = Json::object();
  j["n"] = r.n;
  j["c"] = scalar_to_json(r.scale_c);
  Json change = Json::array();
  for (const auto& column : r.canonical_change) {
    Json col = Json::array();
    for (const auto& entry : column) col.push_back(coord_to_json(entry, BaseRing::Affine));
    change.push_back(col);
  }
  j["canonical_change"] = change;
  if (auto label = class_label(r.n)) j["labels"] = *label;
  return j;
}

Json invariants_to_json(const FiberInvariants& inv, const GaussianRational& t) {
  Json j = Json::object();
  j["t"] = scalar_to_json(t);
  j["killing_det"] = scalar_to_json(inv.killing_det);
  j["killing_rank"] = inv.killing_rank;
  j["derived_dim"] = inv.derived_dim;
  j["center_dim"] = inv.center_dim;
  return j;
}

Json pbw_to_json(const PBWElement& u) {
  Json j = Json::object();
  j["n"] = u.family_parameter();
  Json terms = Json::array();
  for (const auto& [mono, coeff] : u.terms()) {
    Json term = Json::object();
    term["mono"] = Json::array({mono.y, mono.h, mono.x});
    term["coeff"] = poly_to_json(coeff);
    terms.push_back(term);
  }
  j["terms"] = terms;
  return j;
}

Json p1_to_json(const P1Extension& e) {
  Json j = Json::object();
  j["m"] = e.m;
  j["n"] = e.n;
  j["k"] = e.k;
  return j;
}

Json splitting_to_json(const P1Extension& e) {
  auto degrees = splitting_type(e);
  unsigned h0 = 0;
  for (int d : degrees)
    if (d + 1 > 0) h0 += static_cast<unsigned>(d + 1);
  Json j = Json::object();
  j["splitting"] = Json::array({degrees[0], degrees[1], degrees[2]});
  j["h0_dim"] = h0;
  return j;
}

Json sections_to_json(const P1Extension& e, const SectionSpace& s) {
  Json j = p1_to_json(e);
  j["dimension"] = s.dimension;
  Json basis = Json::array();
  for (const auto& pair : s.basis) {
    Json item = Json::object();
    Json c1 = Json::array(), c2 = Json::array();
    for (const auto& c : pair.chart1.coords()) c1.push_back(coord_to_json(c, BaseRing::Affine));
    for (const auto& c : pair.chart2.coords()) c2.push_back(coord_to_json(c, BaseRing::Affine));
    item["chart1"] = c1;
    item["chart2"] = c2;
    basis.push_back(item);
  }
  j["basis"] = basis;
  return j;
}

Json error_to_json(const DomainError& err) {
  Json j = Json::object();
  j["error"] = err.code();
  if (const auto* v = dynamic_cast<const ValidationError*>(&err)) {
    j["axiom"] = v->axiom();
    Json witness = Json::array();
    for (unsigned idx : v->witness()) witness.push_back(idx);
    j[v->witness().size() == 3 ? "triple" : "witness"] = witness;
  }
  if (const auto* nx = dynamic_cast<const NotExtensionError*>(&err)) {
    if (!nx->detail().empty()) j["detail"] = nx->detail();
  }
  j["message"] = err.what();
  return j;
}

}  // namespace hcfam
