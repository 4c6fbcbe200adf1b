#pragma once

// Nearest neighbor interchange moves and the constructive sequences between
// graphs with equal degree sequences: caterpillar normal forms for trees and
// the cut/recurse/glue induction on cycle rank for general connected graphs.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "lopoly/graph.hpp"

namespace lopoly {

class NniError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// A trail a - e - b of length three. `e` joins u and v, `a` is attached at u and
/// `b` at v. Endpoints are explicit so loops and parallel edges are unambiguous.
struct Trail {
  EdgeId a = 0;
  VertexId u = 0;
  EdgeId e = 0;
  VertexId v = 0;
  EdgeId b = 0;

  /// The same edge trail seen from the moved graph; undoes the move.
  Trail inverse() const { return Trail{a, v, e, u, b}; }

  friend bool operator==(const Trail&, const Trail&) = default;
};

/// Throws NniError unless w is a valid trail in g.
void check_trail(const Graph& g, const Trail& w);

/// Moves a's end at u to v and b's end at v to u.
Graph apply_nni(const Graph& g, const Trail& w);

/// An ordered list of moves plus the bijections that carry the replayed graph
/// onto the declared target. Identity relabels are stored explicitly.
struct MoveSequence {
  std::vector<Trail> moves;
  std::map<EdgeId, EdgeId> edge_relabel;
  std::map<VertexId, VertexId> vertex_relabel;
  std::vector<std::uint64_t> snapshots;
  /// Spanning trees whose internal edges carry every pivot (graph_sequence with
  /// restriction); empty otherwise. Target tree uses target labels.
  std::set<EdgeId> source_tree;
  std::set<EdgeId> target_tree;
};

MoveSequence identity_sequence(const Graph& g);

Graph replay_moves(const Graph& g, const std::vector<Trail>& moves);
/// Replays the moves and applies the relabel.
Graph replay(const Graph& g, const MoveSequence& seq);
/// Fills seq.snapshots with graph_hash of the source and each intermediate graph.
void record_snapshots(const Graph& g, MoveSequence& seq);

// --- trees -----------------------------------------------------------------

/// Leaves removed, the rest is a path (possibly empty or a single vertex).
bool is_caterpillar(const Graph& t);
/// Central path of a caterpillar, oriented with the fewest spine inversions
/// (ties: the end with the lower vertex id first).
std::vector<VertexId> central_path(const Graph& c);
std::vector<int> spine(const Graph& c);

/// Longest path in a tree as a vertex list (double BFS from the lowest-id vertex).
std::vector<VertexId> longest_path(const Graph& t);

/// Moves turning a tree into a caterpillar; each move inserts one vertex into a
/// longest path.
MoveSequence caterpillarize(const Graph& t);
/// Adjacent spine swaps (bubble sort) until the spine is nonincreasing.
MoveSequence order_spine(const Graph& c);
/// Leaf swaps until the external edges sit on the spine in `target` order: the
/// first group fills the first spine vertex, and so on.
MoveSequence sort_external(const Graph& c, const std::vector<EdgeId>& target);
/// External edges of a caterpillar listed spine vertex by spine vertex (sorted
/// within each vertex).
std::vector<EdgeId> external_order(const Graph& c);

/// Transforms tree t into tree t2 exactly (under the returned relabel, which
/// fixes every external edge).
MoveSequence tree_sequence(const Graph& t, const Graph& t2);

// --- connected graphs -------------------------------------------------------

/// Transforms g into g2 through the cycle-rank induction. With
/// restrict_to_spanning_trees, every pivot is an internal edge of
/// spanning_tree(g) and (after relabel) of spanning_tree(g2).
MoveSequence graph_sequence(const Graph& g, const Graph& g2, bool restrict_to_spanning_trees = false);

}  // namespace lopoly
