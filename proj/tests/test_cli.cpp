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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "hcfam/cli.hpp"
#include "hcfam/serialize.hpp"

using namespace hcfam;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
  Json json() const { return parse_json_text(out); }
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "hcfam_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string write_scratch(const std::string& name, const std::string& data) {
  fs::path p = scratch_dir() / name;
  std::ofstream(p, std::ios::binary) << data;
  return p.string();
}

}  // namespace

TEST_CASE("catalog to classify pipeline") {
  CliResult cat = run_cli({"catalog", "g", "4"});
  REQUIRE(cat.code == 0);
  std::string file = write_scratch("g4.json", cat.out);

  CliResult cls = run_cli({"classify", file});
  REQUIRE(cls.code == 0);
  Json j = cls.json();
  CHECK(j["n"] == 4);
  CHECK(j["c"] == "1");

  // the l and s catalog entries classify through the same pipeline
  std::string l3 = write_scratch("l3.json", run_cli({"catalog", "l", "3"}).out);
  CHECK(run_cli({"classify", l3}).json()["n"] == 3);
  std::string s2 = write_scratch("s2.json", run_cli({"catalog", "s", "2"}).out);
  CHECK(run_cli({"classify", s2}).json()["n"] == 4);
}

TEST_CASE("validate emits canonical form byte-identically") {
  CliResult cat = run_cli({"catalog", "g", "2"});
  std::string file = write_scratch("g2.json", cat.out);

  CliResult plain = run_cli({"validate", file});
  CHECK(plain.code == 0);
  CHECK(plain.json() == Json{{"valid", true}});

  CliResult echoed = run_cli({"validate", file, "--emit"});
  CHECK(echoed.code == 0);
  CHECK(echoed.out == cat.out);
}

TEST_CASE("fiber subcommand") {
  std::string file = write_scratch("g2f.json", run_cli({"catalog", "g", "2"}).out);
  CliResult r = run_cli({"fiber", file, "2"});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["killing_det"] == "-2048");
  CHECK(j["killing_rank"] == 3);

  CliResult at_zero = run_cli({"fiber", file, "0"});
  CHECK(at_zero.code == 0);
  CHECK(at_zero.json()["killing_rank"] == 1);

  CliResult bad_scalar = run_cli({"fiber", file, "two"});
  CHECK(bad_scalar.code == 2);
  CHECK(bad_scalar.json()["error"] == "ParseError");
}

TEST_CASE("hom and compose subcommands") {
  CHECK(run_cli({"hom", "3", "1"}).json() ==
        Json{{"zero", false}, {"k_min", 0}, {"k_max", 2}});
  CHECK(run_cli({"hom", "1", "3"}).json() == Json{{"zero", true}});
  CHECK(run_cli({"hom", "1", "3", "--localized"}).json() ==
        Json{{"zero", false}, {"k_unbounded", true}});

  CliResult comp = run_cli({"compose", "5,3,2,1,1", "3,1,3,0,-1"});
  REQUIRE(comp.code == 0);
  CHECK(comp.json() == Json{{"m", 5}, {"n", 1}, {"c", "6"}, {"k", 1}, {"s", -1},
                            {"localized", false}});

  // morphism files compose like literals
  std::string mfile = write_scratch("psi.json", dump_json(comp.json()));
  CliResult comp2 = run_cli({"compose", "7,5,1,0,1", mfile});
  CHECK(comp2.json()["m"] == 7);
  CHECK(comp2.json()["c"] == "6");

  CliResult mism = run_cli({"compose", "3,1,2,1,1", "2,1,3,0,1"});
  CHECK(mism.code == 1);
  CHECK(mism.json()["error"] == "ChainMismatch");

  CliResult zero = run_cli({"compose", "3,1,0,0,1", "1,0,2,0,1"});
  CHECK(zero.code == 0);
  CHECK(zero.json() == Json{{"m", 3}, {"n", 0}, {"zero", true}, {"localized", false}});
}

TEST_CASE("apply subcommand") {
  FamilyPtr g3 = make_g(3);
  FamilyElement v = FamilyElement::basis(g3, 2) + FamilyElement::basis(g3, 1);
  std::string efile = write_scratch("elem.json", dump_json(element_to_json(v)));

  CliResult r = run_cli({"apply", "3,1,2,1,1", efile});
  REQUIRE(r.code == 0);
  Json j = r.json();
  // X + H maps to 2x X + H in g(1)
  CHECK(j["coords"] == Json::array({Json::array(), Json::array({"1"}), Json::array({"0", "2"})}));
  CHECK(j["family"]["brackets"]["0,2"][1] == Json::array({"0", "-1"}));

  CliResult zero = run_cli({"apply", "3,1,0,0,1", efile});
  CHECK(zero.code == 0);
  CHECK(zero.json()["coords"] == Json::array({Json::array(), Json::array(), Json::array()}));

  CliResult mism = run_cli({"apply", "2,1,1,0,1", efile});
  CHECK(mism.code == 1);
  CHECK(mism.json()["error"] == "FamilyMismatch");
}

TEST_CASE("pullback subcommand composes with classify") {
  std::string g1 = write_scratch("g1.json", run_cli({"catalog", "g", "1"}).out);
  CliResult pulled = run_cli({"pullback", g1, "--mu", "x^3"});
  REQUIRE(pulled.code == 0);
  std::string pulled_file = write_scratch("g1_x3.json", pulled.out);
  CHECK(run_cli({"classify", pulled_file}).json()["n"] == 3);

  CliResult shifted = run_cli({"pullback", g1, "--mu", "x+1"});
  REQUIRE(shifted.code == 0);
  std::string shifted_file = write_scratch("g1_x1.json", shifted.out);
  CliResult rejected = run_cli({"classify", shifted_file});
  CHECK(rejected.code == 1);
  CHECK(rejected.json()["error"] == "NonMonomial");
  CHECK(rejected.json()["detail"] == "x+1");
}

TEST_CASE("casimir subcommand with center probe") {
  CliResult plain = run_cli({"casimir", "1"});
  REQUIRE(plain.code == 0);
  CHECK(plain.json()["n"] == 1);
  CHECK(plain.json()["terms"].size() == 3);
  CHECK_FALSE(plain.json().contains("probe"));

  CliResult probed = run_cli({"casimir", "1", "--probe-pbw", "2", "--probe-coeff", "3"});
  REQUIRE(probed.code == 0);
  Json probe = probed.json()["probe"];
  CHECK(probe["dimension"] == 7);
  CHECK(probe["dimension_by_pbw_degree"] == Json{{"0", 4}, {"2", 3}});

  // the probe options come as a pair
  CHECK(run_cli({"casimir", "1", "--probe-pbw", "2"}).code == 2);
}

TEST_CASE("p1 subcommands") {
  CliResult cls = run_cli({"p1", "classify", "2", "0", "1"});
  CHECK(cls.json() == Json{{"splitting", Json::array({0, -1, -1})}, {"h0_dim", 1}});

  CliResult secs = run_cli({"p1", "sections", "0", "0", "--", "-2"});
  REQUIRE(secs.code == 0);
  CHECK(secs.json()["dimension"] == 4);
  CHECK(secs.json()["basis"].size() == 4);

  CliResult cramped = run_cli({"p1", "sections", "2", "1", "2", "--max-degree", "3"});
  CHECK(cramped.code == 1);
  CHECK(cramped.json()["error"] == "DegreeBoundTooSmall");
}

TEST_CASE("structured errors and exit codes") {
  CliResult missing = run_cli({"classify", scratch_dir().string() + "/no_such_file.json"});
  CHECK(missing.code == 2);
  CHECK(missing.json()["error"] == "ParseError");

  std::string broken = write_scratch("broken.json", "{\"rank\": 3,");
  CliResult syntax = run_cli({"validate", broken});
  CHECK(syntax.code == 2);
  CHECK(syntax.json()["error"] == "ParseError");

  // well-formed file failing the Jacobi axiom
  Json bad = Json::object();
  bad["rank"] = 4;
  bad["base"] = "affine";
  bad["basis"] = Json::array({"Y", "H", "X", "W"});
  bad["weights"] = Json::array({-2, 0, 2, 0});
  bad["h_index"] = 1;
  bad["brackets"] = Json::object();
  bad["brackets"]["0,1"] = Json::array({Json::array({"2"}), Json::array(), Json::array(), Json::array()});
  bad["brackets"]["1,2"] = Json::array({Json::array(), Json::array(), Json::array({"2"}), Json::array()});
  bad["brackets"]["0,2"] = Json::array({Json::array(), Json::array(), Json::array(), Json::array({"-1"})});
  bad["brackets"]["0,3"] = Json::array({Json::array({"1"}), Json::array(), Json::array(), Json::array()});
  std::string bad_file = write_scratch("jacobi.json", dump_json(bad));

  CliResult invalid = run_cli({"validate", bad_file});
  CHECK(invalid.code == 1);
  Json j = invalid.json();
  CHECK(j["error"] == "ValidationError");
  CHECK(j["axiom"] == "jacobi");
  CHECK(j["triple"] == Json::array({0, 2, 3}));

  CHECK(run_cli({"hom", "3"}).code == 2);       // missing argument
  CHECK(run_cli({"frobnicate"}).code == 2);     // unknown subcommand
  CHECK(run_cli({}).code == 2);                 // no subcommand
  CHECK(run_cli({"hom", "x", "1"}).code == 2);  // non-numeric argument

  // usage errors report on stderr, not stdout
  CliResult usage = run_cli({"hom", "3"});
  CHECK(usage.out.empty());
  CHECK_FALSE(usage.err.empty());
}

TEST_CASE("format and output options") {
  CliResult text = run_cli({"hom", "3", "1", "--format", "text"});
  REQUIRE(text.code == 0);
  CHECK(text.out == "zero: false\nk_min: 0\nk_max: 2\n");
  // no ANSI escapes when not writing to a terminal
  CHECK(text.out.find('\033') == std::string::npos);

  CliResult nested = run_cli({"--format", "text", "p1", "classify", "2", "0", "1"});
  CHECK(nested.out == "splitting: [0, -1, -1]\nh0_dim: 1\n");

  fs::path out_file = scratch_dir() / "report.json";
  CliResult to_file = run_cli({"hom", "3", "1", "--out", out_file.string()});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(parse_json_text(read_file(out_file.string()))["k_max"] == 2);

  CliResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("hcfam") != std::string::npos);

  CliResult unwritable = run_cli({"hom", "3", "1", "--out", "/no/such/dir/report.json"});
  CHECK(unwritable.code == 1);
  CHECK(unwritable.json()["error"] == "FileError");
}
