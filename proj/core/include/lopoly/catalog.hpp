#pragma once

// Small {1,3}-graphs: named examples and exhaustive generation up to
// isomorphism with a canonical labeling.

#include <string>
#include <vector>

#include "lopoly/graph.hpp"

namespace lopoly {

Graph claw();
/// Two vertices joined by three parallel edges.
Graph theta();
/// Loops 1 and 2 on vertices 1 and 2, joined by edge 3.
Graph dumbbell();
Graph k4();
/// A center joined to three vertices that each carry a loop.
Graph looped_tripod();
/// The {1,3}-caterpillar with k degree-3 vertices (2k + 1 edges).
Graph caterpillar_tree(int k);
/// A degree-3 center adjacent to three degree-3 vertices, six leaves.
Graph spider_tree();

/// Looks up a built-in graph by name (claw, theta, dumbbell, k4, t4, spider,
/// caterpillar-<k>). Throws GraphError for unknown names.
Graph named_graph(const std::string& name);
std::vector<std::string> graph_names();

/// Canonical text of g up to isomorphism (g must be a {1,3}-graph).
std::string canonical_form(const Graph& g);
bool isomorphic(const Graph& g, const Graph& h);

/// All connected {1,3}-graphs with m edges, one per isomorphism class, each
/// canonically labeled: degree-3 vertices first, external edges 1..n1.
std::vector<Graph> connected_graphs(int m);
std::vector<Graph> trees(int m);

}  // namespace lopoly
