#include <catch_amalgamated.hpp>

#include "lopoly/catalog.hpp"
#include "lopoly/graph.hpp"

using namespace lopoly;

TEST_CASE("counts of connected {1,3}-graphs") {
  // m: connected graphs / trees
  const std::vector<std::pair<std::size_t, std::size_t>> expected{{0, 0}, {1, 0}, {3, 1}, {2, 0},
                                                                  {4, 1}, {8, 0}, {10, 1}};
  for (int m = 1; m <= 7; ++m) {
    CHECK(connected_graphs(m).size() == expected[static_cast<std::size_t>(m - 1)].first);
    CHECK(trees(m).size() == expected[static_cast<std::size_t>(m - 1)].second);
  }
  CHECK(trees(9).size() == 2);
}

TEST_CASE("generated graphs are valid and pairwise non-isomorphic") {
  for (int m = 2; m <= 6; ++m) {
    auto gs = connected_graphs(m);
    for (std::size_t i = 0; i < gs.size(); ++i) {
      CHECK(validate_13(gs[i]).ok());
      CHECK(is_connected(gs[i]));
      for (std::size_t j = i + 1; j < gs.size(); ++j) CHECK_FALSE(isomorphic(gs[i], gs[j]));
    }
  }
}

TEST_CASE("named graphs") {
  CHECK(named_graph("claw") == claw());
  CHECK(named_graph("caterpillar-3") == caterpillar_tree(3));
  CHECK(isomorphic(named_graph("spider"), spider_tree()));
  CHECK_FALSE(isomorphic(spider_tree(), caterpillar_tree(4)));
  CHECK(isomorphic(named_graph("t4"), looped_tripod()));
  CHECK_THROWS(named_graph("nope"));
  CHECK(graph_names().size() >= 6);
}

TEST_CASE("canonical form ignores labels") {
  Graph g = k4();
  std::map<EdgeId, EdgeId> em{{1, 6}, {2, 5}, {3, 4}, {4, 3}, {5, 2}, {6, 1}};
  std::map<VertexId, VertexId> vm{{1, 4}, {2, 3}, {3, 2}, {4, 1}};
  CHECK(canonical_form(relabel(g, em, vm)) == canonical_form(g));
  CHECK(canonical_form(theta()) != canonical_form(dumbbell()));
}
