#include <catch_amalgamated.hpp>

#include "lopoly/catalog.hpp"
#include "lopoly/graph.hpp"
#include "oracle.hpp"

using namespace lopoly;

TEST_CASE("parse and format round trip") {
  Graph g = parse_graph("# dumbbell\nv 2\ne 1 1 1\ne 2 2 2\ne 3 1 2\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);
  CHECK(g.ends(1).is_loop());
  CHECK(g == dumbbell());
  CHECK(parse_graph(format_graph(g)) == g);
}

TEST_CASE("parse errors carry the line number") {
  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("v 2\ne 1 1 3\n") == 2);
  CHECK(line_of("v 2\ne 1 1 2\ne 1 1 2\n") == 3);
  CHECK(line_of("e 1 1 2\n") == 1);
  CHECK(line_of("v 2\ne 1 1 x\n") == 2);
  CHECK(line_of("v 2\nq 1\n") == 2);
  CHECK(line_of("v 3\ne 1 1 2\ne 3 2 3\n") == 3);
}

TEST_CASE("loops count twice toward degree") {
  Graph g = dumbbell();
  CHECK(g.degree(1) == 3);
  CHECK(g.slots(1) == std::vector<EdgeId>{1, 1, 3});
  CHECK(g.incident_edges(1) == std::vector<EdgeId>{1, 3});
  CHECK(degree_sequence(g) == std::vector<int>{3, 3});
}

TEST_CASE("validation") {
  CHECK(validate_13(claw()).ok());
  CHECK(validate_13(theta()).ok());
  auto path = parse_graph("v 3\ne 1 1 2\ne 2 2 3\n");
  auto rep = validate_13(path);
  CHECK_FALSE(rep.ok());
  CHECK(rep.bad_degree == std::vector<VertexId>{2});
  auto bare = parse_graph("v 2\ne 1 1 2\n");
  CHECK(validate_13(bare).unbounded.size() == 1);
  CHECK_THROWS_AS(require_13(path), GraphError);
}

TEST_CASE("edge classes and structure") {
  Graph c = claw();
  EdgeClass cls = classify_edges(c);
  CHECK(cls.internal.empty());
  CHECK(cls.external == std::set<EdgeId>{1, 2, 3});
  CHECK(is_tree(c));
  CHECK(cycle_rank(k4()) == 3);
  CHECK(cycle_rank(theta()) == 2);
  CHECK(is_connected(named_graph("t4")));
  CHECK(on_cycle(theta(), 1));
  CHECK_FALSE(on_cycle(dumbbell(), 3));
  CHECK(on_cycle(dumbbell(), 1));
  Graph two = parse_graph("v 8\ne 1 1 2\ne 2 1 3\ne 3 1 4\ne 4 5 6\ne 5 5 7\ne 6 5 8\n");
  CHECK(components(two).size() == 2);
  CHECK(cycle_rank(two) == 0);
}

TEST_CASE("cut then glue restores the graph") {
  for (const Graph& g : {theta(), dumbbell(), k4(), named_graph("t4")}) {
    for (const auto& [e, inc] : g.edges()) {
      if (!on_cycle(g, e)) continue;
      auto [h, rec] = cut_edge(g, e);
      CHECK(rec.new_edges == std::pair<EdgeId, EdgeId>{g.max_edge_id() + 1, g.max_edge_id() + 2});
      CHECK(h.edge_count() == g.edge_count() + 1);
      CHECK(h.vertex_count() == g.vertex_count() + 2);
      CHECK(cycle_rank(h) == cycle_rank(g) - 1);
      CHECK(validate_13(h).ok());
      CHECK(glue_edges(h, rec) == g);
    }
  }
  CHECK_THROWS_AS(cut_edge(dumbbell(), 3), GraphError);
}

TEST_CASE("spanning trees and cycle edges") {
  for (const Graph& g : {theta(), dumbbell(), k4()}) {
    auto t = spanning_tree(g);
    CHECK(t.size() + 1 == g.vertex_count());
    EdgeId e = find_cycle_edge(g, t);
    CHECK_FALSE(t.count(e));
    CHECK(on_cycle(g, e));
  }
}

TEST_CASE("relabel and hash") {
  Graph g = k4();
  std::map<EdgeId, EdgeId> em;
  std::map<VertexId, VertexId> vm{{1, 2}, {2, 1}, {3, 3}, {4, 4}};
  for (EdgeId e = 1; e <= 6; ++e) em[e] = 7 - e;
  Graph h = relabel(g, em, vm);
  CHECK(h.edge_count() == 6);
  CHECK(isomorphic(g, h));
  CHECK(graph_hash(g) == graph_hash(k4()));
  CHECK(graph_hash(g) != graph_hash(named_graph("t4")));
}

TEST_CASE("slot oracle agrees with the graph") {
  for (const Graph& g : connected_graphs(6))
    for (VertexId v : g.vertices()) {
      auto s = oracle::ends_at(g, v);
      auto t = g.slots(v);
      std::sort(s.begin(), s.end());
      std::sort(t.begin(), t.end());
      CHECK(s == t);
    }
}
