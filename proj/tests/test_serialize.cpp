#include <catch_amalgamated.hpp>

#include <fstream>

#include "lopoly/catalog.hpp"
#include "lopoly/nni.hpp"
#include "lopoly/quasi_polynomial.hpp"
#include "lopoly/serialize.hpp"

using namespace lopoly;

TEST_CASE("rationals") {
  CHECK(rational_json(Rational(-3, 4)).dump() == "[-3,4]");
  Rational big("123456789012345678901234567891/7");
  big.canonicalize();
  CHECK(rational_json(big)[0].is_string());
  CHECK(rational_from_json(rational_json(big)) == big);
  CHECK(rational_from_json(Json::parse("[6,4]")) == Rational(3, 2));
}

TEST_CASE("graphs and move sequences") {
  CHECK(graph_from_json(graph_json(k4())) == k4());
  MoveSequence s = graph_sequence(k4(), named_graph("t4"), true);
  record_snapshots(k4(), s);
  MoveSequence back = move_sequence_from_json(move_sequence_json(s));
  CHECK(back.moves == s.moves);
  CHECK(back.edge_relabel == s.edge_relabel);
  CHECK(back.vertex_relabel == s.vertex_relabel);
  CHECK(back.snapshots == s.snapshots);
  CHECK(back.source_tree == s.source_tree);
  CHECK(replay(k4(), back) == named_graph("t4"));
}

TEST_CASE("quasi-polynomials") {
  QuasiPolynomial qp = quasi_polynomial(claw());
  CHECK(quasi_polynomial_json(qp).dump() ==
        "{\"constituents\":[[[1,1],[5,6],[1,4],[1,24]],[[1,4],[11,24],[1,4],[1,24]]],\"period\":2}");
  CHECK(quasi_polynomial_from_json(quasi_polynomial_json(qp)) == qp);
}

TEST_CASE("golden tree table parses") {
  std::ifstream in(std::string(LOPOLY_DATA_DIR) + "/tree_table.json");
  REQUIRE(in);
  Json j = Json::parse(in);
  REQUIRE(j.at("rows").size() == 4);
  CHECK(quasi_polynomial_from_json(j["rows"][0]["qp"]) == quasi_polynomial(claw()));
}
