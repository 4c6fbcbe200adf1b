#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "lopoly/serialize.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = lopoly::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(LOPOLY_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"ehrhart", "count", "--graph", "@claw", "--t", "5..2"}).code == 2);
  CHECK(run({"ehrhart", "count", "--graph", "@claw"}).code == 2);
  CHECK(run({"--format", "xml", "graph", "info", "@claw"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("domain errors exit with 1") {
  Result r = run({"graph", "validate", data("graphs/path.g")});
  CHECK(r.code == 1);
  CHECK(r.out.find("degree") != std::string::npos);
  CHECK(run({"graph", "info", "/nonexistent.g"}).code == 1);
  CHECK(run({"ehrhart", "qp", "--graph", data("graphs/path.g")}).code == 1);
}

TEST_CASE("claw quasi-polynomial as json") {
  Result r = run({"--format", "json", "ehrhart", "qp", "--graph", data("graphs/claw.g")});
  REQUIRE(r.code == 0);
  auto qp = lopoly::quasi_polynomial_from_json(lopoly::Json::parse(r.out));
  CHECK(qp.period == 2);
  CHECK(qp.constituents[1][1] == lopoly::Rational(11, 24));
}

TEST_CASE("json output does not depend on the thread count") {
  std::vector<std::string> args{"--format", "json", "ehrhart", "count", "--graph", "@k4", "--t", "0..6"};
  Result one = run(args);
  args.insert(args.begin(), {"--threads", "4"});
  Result four = run(args);
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(one.out == run({"--format", "json", "ehrhart", "count", "--graph", "@k4", "--t", "0..6"}).out);
}

TEST_CASE("scissors verify passes theta to dumbbell") {
  Result r = run({"scissors", "verify", "--a", data("graphs/theta.g"), "--b", data("graphs/dumbbell.g"), "--t", "0..6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  Result j = run({"--format", "json", "scissors", "build", "--graph", "@theta", "--graph", "@dumbbell"});
  CHECK(lopoly::Json::parse(j.out).at("pieces").size() == 2);
}

TEST_CASE("nni sequence then replay") {
  Result s = run({"--format", "json", "nni", "sequence", "--a", "@k4", "--b", "@t4", "--restrict"});
  REQUIRE(s.code == 0);
  std::string path = "cli_moves.json";
  std::ofstream(path) << s.out;
  Result r = run({"nni", "replay", "--graph", "@k4", "--moves", path, "--target", data("graphs/t4.g")});
  CHECK(r.code == 0);
  Result bad = run({"nni", "replay", "--graph", "@k4", "--moves", path, "--target", "@k4"});
  CHECK(bad.code == 1);
}

TEST_CASE("weighted move") {
  Result r = run({"--format", "json", "wnni", "apply", "--graph", "@theta", "--weights", "3,1,2", "--trail", "2,1,3,2,1"});
  REQUIRE(r.code == 0);
  auto j = lopoly::Json::parse(r.out);
  CHECK(j["weights"][2] == lopoly::Json::parse("[0,1]"));
  CHECK(run({"wnni", "apply", "--graph", "@theta", "--weights", "3,1", "--trail", "2,1,3,2,1"}).code == 2);
}

TEST_CASE("verlinde, volume, semi-reflexivity, reflexivity") {
  Result v = run({"ehrhart", "verlinde", "--n", "2", "--t", "1..3"});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("1\t1\t1\n3\t5\t5\n", 0) == 0);
  CHECK(run({"ehrhart", "volume", "--graph", "@k4"}).code == 0);
  CHECK(run({"ehrhart", "semireflexive", "--graph", "@dumbbell", "--s", "1/2,5/4,11/4,10/3"}).code == 0);
  CHECK(run({"reflexive", "check", "--graph", "@claw"}).code == 0);
  Result h = run({"--format", "json", "reflexive", "hstar", "--graph", "@claw"});
  CHECK(lopoly::Json::parse(h.out)["h_star"] == lopoly::Json::parse("[1,7,7,1]"));
  CHECK(run({"reflexive", "vertices", "--graph", "@dumbbell"}).out.find("(1/4,1/4,1/2)") != std::string::npos);
}

TEST_CASE("tree table against the golden fixture") {
  Result r = run({"--format", "json", "tree-table", "--check", data("tree_table.json")});
  CHECK(r.code == 0);
  for (const auto& row : lopoly::Json::parse(r.out)["rows"]) CHECK(row["matches_golden"] == true);
}
