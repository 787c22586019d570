#include <doctest.h>

#include <json.hpp>

#include "bruhat/cli.hpp"

using namespace bruhat::cli;
using nlohmann::json;

namespace {

RunResult go(std::string cmd, std::string type, std::string j = "", Format f = Format::Json) {
  return run({std::move(cmd), std::move(type), std::move(j), f});
}

RunResult argv(std::vector<const char*> args) {
  args.insert(args.begin(), "bruhat-descent");
  auto parsed = parse(static_cast<int>(args.size()), args.data());
  if (auto* r = std::get_if<RunResult>(&parsed)) return *r;
  return run(std::get<JobSpec>(parsed));
}

}  // namespace

TEST_CASE("smooth") {
  auto r = go("smooth", "A3", "1,3");
  REQUIRE(r.exit_code == kExitOk);
  auto j = json::parse(r.output);
  CHECK(j["smooth"] == false);
  CHECK(j["violations"][0]["s"] == 2);
  CHECK(j["violations"][0]["kind"] == "MultipleNeighborsInJ");
}

TEST_CASE("hpoly") {
  auto j = json::parse(go("hpoly", "A3").output);
  CHECK(j["coefficients"]["[0,0,0]"] == 1);
  CHECK(j["coefficients"]["[1,0,0]"] == 3);
  CHECK(j["coefficients"]["[0,1,0]"] == 5);
  CHECK(j["coefficients"]["[1,0,1]"] == 5);
  CHECK(j["diagonal"] == json::array({1, 11, 11, 1}));
}

TEST_CASE("smooth-enum") {
  auto j = json::parse(go("smooth-enum", "G2").output);
  CHECK(j["smooth"] == json::parse("[[],[1],[2]]"));
  CHECK(j["published_diff"]["only_computed"].empty());
  auto e8 = json::parse(go("smooth-enum", "E8").output);
  CHECK(e8["published_diff"]["only_published"] == json::parse("[[1,2,5,6]]"));
  CHECK(e8["published_diff"]["flagged"] == json::parse("[[1,2,5,6]]"));
}

TEST_CASE("vectors and lattice") {
  CHECK(json::parse(go("fvector", "A3").output) == json::array({24, 36, 14}));
  CHECK(json::parse(go("hvector", "A3").output) == json::array({1, 11, 11, 1}));
  auto l = json::parse(go("lattice", "A3", "2,3").output);
  CHECK(l["members"][0]["I_star"] == json::array({2, 3}));
  CHECK(l["members"][0]["orbit_size"] == 4);
}

TEST_CASE("quotient, descent system, ascents, edges") {
  auto q = json::parse(go("quotient", "A3", "2,3").output);
  CHECK(q["size"] == 4);
  CHECK(q["elements"][3]["word"] == json::array({3, 2, 1}));
  CHECK(q["elements"][3]["length"] == 3);

  auto d = json::parse(go("descent-system", "A3", "2,3").output);
  CHECK(d["classes"][0]["s"] == 1);
  CHECK(d["classes"][0]["elements"].size() == 3);

  auto a = json::parse(go("ascents", "A3", "2,3").output);
  CHECK(a["rows"][0]["ascents"].size() == 3);
  CHECK(a["rows"][3]["descents"].size() == 3);
  CHECK(a["rows"][1]["nu"]["1"] == 2);

  auto e = json::parse(go("edges", "A3", "2,3").output);
  CHECK(e["pairs"] == 6);
  auto dot = go("edges", "A3", "2,3", Format::Dot);
  CHECK(dot.output.find("digraph") == 0);
  CHECK(dot.output.find("label=\"s3s2s1\"") != std::string::npos);
}

TEST_CASE("diagram") {
  auto j = json::parse(go("diagram", "G2").output);
  CHECK(j["cartan"] == json::parse("[[2,-1],[-3,2]]"));
  CHECK(go("diagram", "G2", "", Format::Text).output == "G2\n2 -1\n-3 2\n");
}

TEST_CASE("verify") {
  auto r = go("verify", "B3", "1");
  CHECK(r.exit_code == kExitOk);
  CHECK(json::parse(r.output)["ok"] == true);
}

TEST_CASE("exit codes") {
  CHECK(go("smooth", "H3").exit_code == kExitParse);
  CHECK(go("smooth", "A3", "4").exit_code == kExitParse);
  CHECK(go("smooth", "A3", "1,2,3").exit_code == kExitParse);
  CHECK(go("hpoly", "A3", "", Format::Dot).exit_code == kExitParse);
  CHECK(run({"quotient", "E8", "", Format::Json, 1000}).exit_code == kExitBudget);
  CHECK(argv({"nope", "A3"}).exit_code == kExitParse);
  CHECK(argv({"smooth"}).exit_code == kExitParse);
  CHECK(argv({"smooth", "A3", "--out", "xml"}).exit_code == kExitParse);
}

TEST_CASE("argv parsing") {
  auto r = argv({"smooth", "A3", "--j", "1,3", "--seed", "7"});
  CHECK(r.exit_code == kExitOk);
  CHECK(json::parse(r.output)["smooth"] == false);
  auto t = argv({"hpoly", "A3", "--j", "", "--out", "text"});
  CHECK(t.output.rfind("1 + ", 0) == 0);
  CHECK(argv({"edges", "A3", "--j", "2,3", "--out", "dot"}).output.find("digraph") == 0);
  CHECK(argv({"quotient", "E8", "--budget", "100"}).exit_code == kExitBudget);
}

TEST_CASE("output is deterministic") {
  CHECK(go("ascents", "D4", "2").output == go("ascents", "D4", "2").output);
}
