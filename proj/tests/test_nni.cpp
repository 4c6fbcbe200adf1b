#include <catch_amalgamated.hpp>

#include <random>

#include "lopoly/catalog.hpp"
#include "lopoly/nni.hpp"
#include "oracle.hpp"

using namespace lopoly;

TEST_CASE("theta to dumbbell in one move") {
  Trail w{2, 1, 3, 2, 1};
  Graph d = apply_nni(theta(), w);
  CHECK(isomorphic(d, dumbbell()));
  CHECK(d.ends(1).is_loop());
  CHECK(d.ends(2).is_loop());
  CHECK(apply_nni(d, w.inverse()) == theta());
}

TEST_CASE("invalid trails are rejected") {
  CHECK_THROWS_AS(apply_nni(claw(), Trail{1, 1, 2, 3, 3}), NniError);
  CHECK_THROWS_AS(apply_nni(theta(), Trail{1, 1, 3, 2, 1}), NniError);
  CHECK_THROWS_AS(apply_nni(dumbbell(), Trail{3, 1, 1, 1, 3}), NniError);
  CHECK_THROWS_AS(apply_nni(k4(), Trail{9, 1, 1, 2, 4}), NniError);
}

TEST_CASE("every move is undone by its inverse") {
  for (int m = 3; m <= 7; ++m)
    for (const Graph& g : connected_graphs(m))
      for (const Trail& w : oracle::trails(g)) {
        Graph h = apply_nni(g, w);
        CHECK(degree_sequence(h) == degree_sequence(g));
        CHECK(apply_nni(h, w.inverse()) == g);
      }
}

TEST_CASE("caterpillar normal form") {
  Graph t = spider_tree();
  CHECK_FALSE(is_caterpillar(t));
  MoveSequence s = caterpillarize(t);
  Graph c = replay_moves(t, s.moves);
  CHECK(is_caterpillar(c));
  MoveSequence o = order_spine(c);
  Graph c2 = replay_moves(c, o.moves);
  CHECK(is_caterpillar(c2));
  auto sp = spine(c2);
  CHECK((std::is_sorted(sp.begin(), sp.end(), std::greater<>()) || std::is_sorted(sp.begin(), sp.end())));
  CHECK(longest_path(caterpillar_tree(4)).size() == 6);
}

TEST_CASE("sorting external edges") {
  Graph c = caterpillar_tree(3);
  // Leaf groups of sizes 2, 1, 2 along the spine.
  REQUIRE(external_order(c) == std::vector<EdgeId>{1, 2, 3, 4, 5});
  const std::vector<EdgeId> target{3, 5, 1, 2, 4};
  MoveSequence s = sort_external(c, target);
  auto got = external_order(replay_moves(c, s.moves));
  auto mirrored = target;
  std::reverse(mirrored.begin(), mirrored.end());
  std::sort(mirrored.begin(), mirrored.begin() + 2);
  std::sort(mirrored.begin() + 3, mirrored.end());
  CHECK((got == target || got == mirrored));
}

TEST_CASE("tree sequences replay onto relabeled targets") {
  std::mt19937_64 rng(3);
  for (int m : {5, 7, 9})
    for (const Graph& a : trees(m))
      for (const Graph& b : trees(m)) {
        CHECK(replay(a, tree_sequence(a, b)) == b);
        // Shuffle the internal edges of b.
        EdgeClass cls = classify_edges(b);
        std::vector<EdgeId> in(cls.internal.begin(), cls.internal.end()), out = in;
        std::shuffle(out.begin(), out.end(), rng);
        std::map<EdgeId, EdgeId> em;
        for (const auto& [e, inc] : b.edges()) em[e] = e;
        for (std::size_t i = 0; i < in.size(); ++i) em[in[i]] = out[i];
        std::map<VertexId, VertexId> vm;
        for (VertexId v : b.vertices()) vm[v] = v;
        Graph b2 = relabel(b, em, vm);
        CHECK(replay(a, tree_sequence(a, b2)) == b2);
      }
}

TEST_CASE("graph sequences and the pivot restriction") {
  Graph a = k4(), b = named_graph("t4");
  for (bool restrict : {false, true}) {
    MoveSequence s = graph_sequence(a, b, restrict);
    CHECK(replay(a, s) == b);
    record_snapshots(a, s);
    CHECK(s.snapshots.size() == s.moves.size() + 1);
    if (restrict) {
      CHECK(s.source_tree.size() == 3);
      for (const Trail& w : s.moves) {
        CHECK(s.source_tree.count(w.e));
        CHECK(s.target_tree.count(s.edge_relabel.at(w.e)));
      }
    }
  }
  CHECK_THROWS_AS(graph_sequence(theta(), claw()), NniError);
}

TEST_CASE("identity sequence") {
  MoveSequence s = identity_sequence(k4());
  CHECK(s.moves.empty());
  CHECK(replay(k4(), s) == k4());
}
