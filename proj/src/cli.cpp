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

#include "hcfam/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>

#ifdef _WIN32
#include <io.h>
#define HCFAM_ISATTY _isatty(_fileno(stdout))
#else
#include <unistd.h>
#define HCFAM_ISATTY isatty(fileno(stdout))
#endif

#include "CLI11.hpp"

#include "hcfam/serialize.hpp"

namespace hcfam::cli {

namespace {

bool color_enabled(const std::ostream& out) {
  const char* env = std::getenv("HCFAM_COLOR");
  if (env && std::string(env) == "never") return false;
  return &out == &std::cout && HCFAM_ISATTY;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_scalar_array(const Json& j) {
  for (const auto& item : j)
    if (item.is_object() || item.is_array()) return false;
  return true;
}

void render_text(const Json& j, std::ostream& os, bool color, unsigned indent) {
  const std::string pad(indent, ' ');
  const char* key_on = color ? "\033[36m" : "";
  const char* key_off = color ? "\033[0m" : "";
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      os << pad << key_on << key << key_off << ":";
      if (value.is_object() || (value.is_array() && !is_scalar_array(value))) {
        os << "\n";
        render_text(value, os, color, indent + 2);
      } else if (value.is_array()) {
        os << " [";
        bool first = true;
        for (const auto& item : value) {
          if (!first) os << ", ";
          first = false;
          os << scalar_text(item);
        }
        os << "]\n";
      } else {
        os << " " << scalar_text(value) << "\n";
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_object() || item.is_array()) {
        os << pad << "-\n";
        render_text(item, os, color, indent + 2);
      } else {
        os << pad << "- " << scalar_text(item) << "\n";
      }
    }
    return;
  }
  os << pad << scalar_text(j) << "\n";
}

Morphism morphism_from_arg(const std::string& arg, bool localized) {
  if (arg.find(',') != std::string::npos) return parse_morphism_compact(arg, localized);
  return json_to_morphism(parse_json_text(read_file(arg)));
}

FamilyPtr family_from_file(const std::string& path) {
  return json_to_family(parse_json_text(read_file(path)));
}

FamilyElement zero_image(const ZeroMorphism& z) {
  FamilyPtr target = make_g(z.n);
  if (z.localized) target = localize(target);
  return FamilyElement::zero(target);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact algebra of rank-3 graded Lie algebra families over the affine line"};
  app.name("hcfam");
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "write the report to a file instead of stdout");

  std::function<Json()> action;

  // Global options (--format, --out) may trail the subcommand.
  auto add_subcommand = [](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  // catalog
  auto* catalog = add_subcommand(&app, "catalog", "emit a named family as a family file");
  catalog->require_subcommand(1);
  unsigned cat_g_n = 0, cat_l_n = 0, cat_s_k = 0;
  add_subcommand(catalog, "g", "the family g(n)")
      ->add_option("n", cat_g_n, "family index")
      ->required();
  catalog->get_subcommand("g")->callback(
      [&] { action = [&] { return family_to_json(*make_g(cat_g_n)); }; });
  add_subcommand(catalog, "l", "the subfamily l(n) of g(0), with embedding")
      ->add_option("n", cat_l_n, "family index")
      ->required();
  catalog->get_subcommand("l")->callback(
      [&] { action = [&] { return embedded_family_to_json(make_l(cat_l_n)); }; });
  add_subcommand(catalog, "s", "the subfamily s(k) of g(0), with embedding")
      ->add_option("k", cat_s_k, "twist index")
      ->required();
  catalog->get_subcommand("s")->callback(
      [&] { action = [&] { return embedded_family_to_json(make_s(cat_s_k)); }; });

  // classify
  std::string classify_file;
  auto* classify = add_subcommand(&app, "classify", "classify a family file as some g(n)");
  classify->add_option("family", classify_file, "family JSON file")->required();
  classify->callback([&] {
    action = [&] { return classification_to_json(classify_extension(*family_from_file(classify_file))); };
  });

  // fiber
  std::string fiber_file, fiber_t;
  auto* fiber = add_subcommand(&app, "fiber", "invariants of the fiber Lie algebra at a point");
  fiber->add_option("family", fiber_file, "family JSON file")->required();
  fiber->add_option("t", fiber_t, "base point (scalar text, e.g. \"2\" or \"1/2+1 i\")")
      ->required();
  fiber->callback([&] {
    action = [&] {
      GaussianRational t = parse_scalar(fiber_t);
      FamilyPtr f = family_from_file(fiber_file);
      return invariants_to_json(fiber_invariants(fiber_at(*f, t)), t);
    };
  });

  // hom
  unsigned hom_m = 0, hom_n = 0;
  bool hom_localized = false;
  auto* hom = add_subcommand(&app, "hom", "shape of the morphism space g(m) -> g(n)");
  hom->add_option("m", hom_m, "source index")->required();
  hom->add_option("n", hom_n, "target index")->required();
  hom->add_flag("--localized", hom_localized, "over the punctured line");
  hom->callback([&] { action = [&] { return hom_to_json(hom_space(hom_m, hom_n, hom_localized)); }; });

  // compose
  std::string comp_first, comp_second;
  bool comp_localized = false;
  auto* comp = add_subcommand(&app, "compose", "compose two morphisms (first applied first)");
  comp->add_option("first", comp_first, "morphism literal \"m,n,c,k,s\" or JSON file")->required();
  comp->add_option("second", comp_second, "morphism literal \"n,p,c,k,s\" or JSON file")->required();
  comp->add_flag("--localized", comp_localized, "over the punctured line");
  comp->callback([&] {
    action = [&] {
      Morphism a = morphism_from_arg(comp_first, comp_localized);
      Morphism b = morphism_from_arg(comp_second, comp_localized);
      return morphism_to_json(compose(a, b));
    };
  });

  // apply
  std::string apply_morphism, apply_element;
  bool apply_localized = false;
  auto* app_cmd = add_subcommand(&app, "apply", "apply a morphism to a family element");
  app_cmd->add_option("morphism", apply_morphism, "morphism literal \"m,n,c,k,s\" or JSON file")
      ->required();
  app_cmd->add_option("element", apply_element, "element JSON file")->required();
  app_cmd->add_flag("--localized", apply_localized, "over the punctured line");
  app_cmd->callback([&] {
    action = [&] {
      Morphism psi = morphism_from_arg(apply_morphism, apply_localized);
      FamilyElement v = json_to_element(parse_json_text(read_file(apply_element)));
      if (std::holds_alternative<ZeroMorphism>(psi))
        return element_to_json(zero_image(std::get<ZeroMorphism>(psi)));
      return element_to_json(apply(std::get<PairMorphism>(psi), v));
    };
  });

  // pullback
  std::string pull_file, pull_mu;
  auto* pull = add_subcommand(&app, "pullback", "substitute a polynomial into a family's brackets");
  pull->add_option("family", pull_file, "family JSON file")->required();
  pull->add_option("--mu", pull_mu, "substituted polynomial, e.g. \"x^2\"")->required();
  pull->callback([&] {
    action = [&] {
      FamilyPtr f = family_from_file(pull_file);
      return family_to_json(*pullback(*f, parse_poly(pull_mu)));
    };
  });

  // casimir
  unsigned cas_n = 0, cas_pbw = 0, cas_coeff = 0;
  auto* cas = add_subcommand(&app, "casimir", "Casimir element of U(g(n)), optionally probing the center");
  cas->add_option("n", cas_n, "family index")->required();
  auto* opt_pbw = cas->add_option("--probe-pbw", cas_pbw, "probe: max PBW degree");
  auto* opt_coeff = cas->add_option("--probe-coeff", cas_coeff, "probe: max coefficient degree");
  opt_pbw->needs(opt_coeff);
  opt_coeff->needs(opt_pbw);
  cas->callback([&] {
    action = [&] {
      Json report = pbw_to_json(casimir(cas_n));
      if (opt_pbw->count() > 0) {
        CenterProbeResult probe = center_probe(cas_n, cas_pbw, cas_coeff);
        Json p = Json::object();
        p["pbw_degree"] = probe.pbw_degree;
        p["coeff_degree"] = probe.coeff_degree;
        p["dimension"] = probe.dimension;
        std::map<unsigned, unsigned> by_degree;
        for (const auto& u : probe.basis) ++by_degree[u.pbw_degree()];
        Json dims = Json::object();
        for (const auto& [degree, count] : by_degree) dims[std::to_string(degree)] = count;
        p["dimension_by_pbw_degree"] = dims;
        report["probe"] = p;
      }
      return report;
    };
  });

  // p1
  auto* p1 = add_subcommand(&app, "p1", "extensions over the projective line");
  p1->require_subcommand(1);
  unsigned p1c_m = 0, p1c_n = 0, p1s_m = 0, p1s_n = 0, p1s_bound = 0;
  int p1c_k = 0, p1s_k = 0;
  auto* p1c = add_subcommand(p1, "classify", "splitting type and section count of (m,n,k)");
  p1c->add_option("m", p1c_m, "chart-1 index")->required();
  p1c->add_option("n", p1c_n, "chart-2 index")->required();
  p1c->add_option("k", p1c_k, "gluing exponent")->required();
  p1c->callback([&] { action = [&] { return splitting_to_json(make_p1(p1c_m, p1c_n, p1c_k)); }; });
  auto* p1s = add_subcommand(p1, "sections", "global sections of (m,n,k) by chart matching");
  p1s->add_option("m", p1s_m, "chart-1 index")->required();
  p1s->add_option("n", p1s_n, "chart-2 index")->required();
  p1s->add_option("k", p1s_k, "gluing exponent")->required();
  auto* opt_bound = p1s->add_option("--max-degree", p1s_bound, "chart-1 degree bound");
  p1s->callback([&] {
    action = [&] {
      P1Extension e = make_p1(p1s_m, p1s_n, p1s_k);
      SectionSpace s =
          opt_bound->count() > 0 ? global_sections(e, p1s_bound) : global_sections(e);
      return sections_to_json(e, s);
    };
  });

  // validate
  std::string validate_file;
  bool validate_emit = false;
  auto* val = add_subcommand(&app, "validate", "check a family file against the axioms");
  val->add_option("family", validate_file, "family JSON file")->required();
  val->add_flag("--emit", validate_emit, "re-emit the family in canonical form");
  val->callback([&] {
    action = [&] {
      FamilyPtr fam = family_from_file(validate_file);
      if (validate_emit) return family_to_json(*fam);
      Json j = Json::object();
      j["valid"] = true;
      return j;
    };
  });

  std::vector<const char*> argv;
  argv.push_back("hcfam");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    Json report = action();
    std::string payload = format == "json"
                              ? dump_json(report)
                              : [&] {
                                  std::ostringstream os;
                                  render_text(report, os, color_enabled(out), 0);
                                  return os.str();
                                }();
    if (!out_path.empty())
      write_file(out_path, payload);
    else
      out << payload;
    return 0;
  } catch (const ParseError& e) {
    out << dump_json(error_to_json(e));
    return 2;
  } catch (const DomainError& e) {
    out << dump_json(error_to_json(e));
    return 1;
  } catch (const std::exception& e) {
    Json j = Json::object();
    j["error"] = "InternalError";
    j["message"] = e.what();
    out << dump_json(j);
    return 1;
  }
}

}  // namespace hcfam::cli
