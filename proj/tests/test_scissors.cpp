#include <catch_amalgamated.hpp>

#include "lopoly/catalog.hpp"
#include "lopoly/counting.hpp"
#include "lopoly/scissors.hpp"
#include "oracle.hpp"

using namespace lopoly;

TEST_CASE("half spaces") {
  HalfSpace ge{{1, -1, 0}, Sense::weak_ge};
  HalfSpace lt{{1, -1, 0}, Sense::strict_lt};
  RatVector on{1, 1, 0}, above{2, 1, 0};
  CHECK(ge.holds(on));
  CHECK_FALSE(lt.holds(on));
  CHECK(ge.holds(above));
  CHECK_FALSE(lt.holds(above));
}

TEST_CASE("theta to dumbbell splits on w1 = w2") {
  Graph a = theta();
  MoveSequence seq = graph_sequence(a, dumbbell());
  Decomposition d = build_decomposition(a, seq);
  REQUIRE(d.pieces.size() == 2);
  for (const Piece& p : d.pieces) CHECK(p.region.size() == 1);
  // Every point of P_theta goes to the max-formula image.
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    RatVector w = oracle::random_point(rng, a, 1);
    RatVector want = w;
    want[2] = oracle::pivot_weight(a, w, seq.moves.front());
    CHECK(evaluate_piecewise(d, w) == want);
    CHECK(replay_point(d, w) == want);
    CHECK(oracle::in_polytope(dumbbell(), want, 1));
  }
}

TEST_CASE("every source lattice point lies in exactly one piece") {
  Graph a = k4();
  Decomposition d = build_decomposition(a, graph_sequence(a, named_graph("t4"), true));
  enumerate_points(inequality_system(a), 3, false, [&](const std::vector<std::int64_t>& p) {
    RatVector w;
    for (auto x : p) w.emplace_back(static_cast<long>(x));
    int owners = 0;
    for (const Piece& piece : d.pieces) owners += piece.claims(w);
    CHECK(owners == 1);
    CHECK(locate_piece(d, w).has_value());
  });
}

TEST_CASE("verification report") {
  Graph a = theta();
  Decomposition d = build_decomposition(a, graph_sequence(a, dumbbell()));
  VerifyReport rep = verify_decomposition(d, {0, 1, 2, 3});
  CHECK(rep.ok());
  REQUIRE(rep.dilations.size() == 4);
  for (const auto& c : rep.dilations) {
    CHECK(c.source_points == c.target_points);
    CHECK(c.source_points == oracle::brute_count(a, c.t));
    CHECK(c.target_points == oracle::brute_count(dumbbell(), c.t));
  }
}

TEST_CASE("a broken map is caught") {
  Graph a = theta();
  Decomposition d = build_decomposition(a, graph_sequence(a, dumbbell()));
  d.pieces[0].map.matrix[2][2] = 2;
  CHECK_FALSE(verify_decomposition(d, {0, 1, 2}).ok());
}
