#include <doctest.h>

#include <filesystem>

#include <json.hpp>

#include "helpers.hpp"
#include "orbk/commands.hpp"

using namespace orbk;
using nlohmann::json;

namespace {

std::string data(const char* name) { return (std::filesystem::path(ORBK_DATA_DIR) / name).string(); }

json run(const std::string& command, const char* file, const CommandOptions& o = {}, int expect = kExitOk) {
  const auto r = run_command_on_file(command, file ? std::optional<std::string>(data(file)) : std::nullopt, o);
  CHECK_MESSAGE(r.exit_code == expect, r.output);
  REQUIRE(!r.output.empty());
  CHECK(r.output.back() == '\n');
  return json::parse(r.output);
}

}  // namespace

TEST_CASE("sectors on Z4") {
  const auto j = run("sectors", "z4_mixed.json");
  std::vector<std::string> iotas;
  for (const auto& s : j["sectors"]) iotas.push_back(s["iota"]);
  std::sort(iotas.begin(), iotas.end());
  CHECK(iotas == std::vector<std::string>{"0", "1/2", "3/4", "5/4"});
  CHECK(j["sectors"][0]["fixed_dim"] == 2);
  CHECK(j["group_order"] == 4);
}

TEST_CASE("tables and euler numbers") {
  const auto p = run("poincare", "p112.json");
  CHECK(p["table"] == json{{"0", 1}, {"2", 2}, {"4", 1}});
  CHECK(run("euler", "p112.json")["euler_number"] == 4);
  CHECK(run("poincare", "p12.json")["table"] == json{{"0", 1}, {"1", 1}, {"2", 1}});
  CHECK(run("poincare", "z4_mixed.json")["label"] == "age-graded dimension table");
  CHECK(run("mckay", "q8.json")["table"] == json{{"0", 1}, {"2", 4}});
  CHECK(run("mckay", "z3_gl1.json", {}, kExitInputError)["error"] == "NotSL");
}

TEST_CASE("ring and counting on S3") {
  CommandOptions o;
  const auto sectors = run("sectors", "s3_point.json");
  std::size_t t = 0, r = 0;
  for (const auto& s : sectors["sectors"]) {
    if (s["element_order"] == 2) t = s["index"];
    if (s["element_order"] == 3) r = s["index"];
  }
  o.sectors = {t, t};
  const auto ring = run("ring", "s3_point.json", o);
  CHECK(ring["product"] == json::array({{{"coefficient", "3"}, {"sector", 0}}, {{"coefficient", "3"}, {"sector", r}}}));
  CHECK(ring["normalization"].is_string());

  CommandOptions three;
  three.classes = {t, t, r};
  CHECK(run("threepoint", "s3_point.json", three)["threepoint"] == "1");
  CHECK(run("kpoint", "s3_point.json", three)["count"] == "1");
  CommandOptions two;
  two.classes = {t, t};
  CHECK(run("pairing", "s3_point.json", two)["pairing"] == "1/2");
  CHECK(run("pairing", "s3_point.json", three, kExitInputError)["error"] == "InvalidArgument");
  CommandOptions bad;
  bad.classes = {0, 9};
  CHECK(run("pairing", "s3_point.json", bad, kExitInputError)["error"] == "InvalidArgument");
}

TEST_CASE("ring refuses non-abelian linear input") {
  const auto r = run_command("ring", parse_input(R"({"kind":"matrix_group","dimension":3,"conductor":1,
    "generators":[[["0","1","0"],["1","0","0"],["0","0","1"]],[["0","0","1"],["1","0","0"],["0","1","0"]]]})"), {});
  CHECK(r.exit_code == kExitInputError);
  CHECK(json::parse(r.output)["error"] == "UnsupportedGeometry");
  CHECK(run("ring", "p112.json", {}, kExitInputError)["error"] == "UnsupportedGeometry");
}

TEST_CASE("goodness commands") {
  CommandOptions o;
  o.element = "0.0";
  const auto g = run("goodmap", "z4_mixed.json", o);
  CHECK(g["good"] == false);
  CHECK(g["verdict"] == "NotGood");
  CHECK(g["lift_scan"] == "no_lifts");
  CHECK(g["equivalence"] == "stabilizer-conjugation");

  CommandOptions l;
  l.axes = {0};
  l.order = 2;
  l.character = 1;
  const auto lifts = run("lifts", "klein.json", l);
  CHECK(lifts["class_count"] == 2);
  CHECK(lifts["status"] == "ok");
  l.axes = {1};
  CHECK(run("lifts", "z4_mixed.json", l)["status"] == "no_lifts");

  CommandOptions missing;
  CHECK(run("goodmap", "z4_mixed.json", missing, kExitInputError)["error"] == "InvalidArgument");
  o.element = "";
  CHECK(run("goodmap", "z4_mixed.json", o, kExitInputError)["error"] == "IdentityElement");
  o.element = "5";
  CHECK(run("goodmap", "z4_mixed.json", o, kExitInputError)["error"] == "InvalidArgument");
}

TEST_CASE("vdim") {
  CommandOptions o;
  o.c1a = "0";
  o.dim = 0;
  o.genus = 0;
  o.marks = 3;
  o.iotas = {"0", "0", "0"};
  const auto r = run_command("vdim", std::nullopt, o);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output) == json{{"virtual_dimension", "0"}});
  o.c1a = "x";
  CHECK(run_command("vdim", std::nullopt, o).exit_code == kExitInputError);
  o.c1a.reset();
  CHECK(run_command("vdim", std::nullopt, o).exit_code == kExitInputError);
}

TEST_CASE("verify exit codes") {
  const auto s3 = run("verify", "s3_point.json");
  CHECK(s3["passed"] == true);
  for (const auto& r : s3["reports"]) CHECK(r["passed"] == true);
  CHECK(run("verify", "p112.json")["passed"] == true);
}

TEST_CASE("failure paths") {
  const auto unknown = run_command("frobnicate", std::nullopt, {});
  CHECK(unknown.exit_code == kExitInputError);
  CHECK(json::parse(unknown.output)["error"] == "UnknownCommand");
  CHECK(run_command("sectors", std::nullopt, {}).exit_code == kExitInputError);
  CHECK(run_command_on_file("sectors", std::string("/nonexistent.json"), {}).exit_code == kExitInputError);
  CommandOptions tiny;
  tiny.cap = 3;
  CHECK(run("sectors", "q8.json", tiny, kExitInputError)["error"] == "CapExceeded");
}

TEST_CASE("output is deterministic") {
  for (const auto& cmd : command_names()) {
    if (cmd == "vdim" || cmd == "verify") continue;
    CommandOptions o;
    o.classes = {0, 0, 0};
    o.element = "0";
    o.axes = {0};
    o.order = 2;
    for (const char* f : {"z4_mixed.json", "s3_point.json", "klein.json", "p112.json"}) {
      const auto a = run_command_on_file(cmd, data(f), o);
      const auto b = run_command_on_file(cmd, data(f), o);
      CHECK(a.output == b.output);
      CHECK(a.exit_code == b.exit_code);
    }
  }
}
