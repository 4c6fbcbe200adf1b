#pragma once

// Multigraphs in the incidence-function style: a vertex set, an edge set, and a
// map from each edge to an unordered pair of (not necessarily distinct)
// vertices. Loops and parallel edges are ordinary edges.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lopoly {

using VertexId = int;
using EdgeId = int;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Unordered endpoint pair, stored with first <= second.
struct Incidence {
  VertexId first = 0;
  VertexId second = 0;

  Incidence() = default;
  Incidence(VertexId x, VertexId y) : first(x < y ? x : y), second(x < y ? y : x) {}

  bool is_loop() const { return first == second; }
  bool touches(VertexId x) const { return first == x || second == x; }
  /// The endpoint opposite to x (x itself for a loop).
  VertexId other(VertexId x) const { return first == x ? second : first; }
  /// Replaces one occurrence of `from` by `to`.
  Incidence moved(VertexId from, VertexId to) const {
    return first == from ? Incidence(to, second) : Incidence(first, to);
  }

  friend bool operator==(const Incidence&, const Incidence&) = default;
  friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

class Graph {
 public:
  Graph() = default;
  /// Throws GraphError on a duplicate vertex or an edge referencing an unknown vertex.
  Graph(std::vector<VertexId> vertices, std::map<EdgeId, Incidence> edges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::map<EdgeId, Incidence>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }
  const Incidence& ends(EdgeId e) const;

  /// Loops count twice.
  int degree(VertexId v) const;
  /// Incident edge ids with multiplicity (a loop appears twice), sorted.
  std::vector<EdgeId> slots(VertexId v) const;
  /// Distinct incident edges, sorted.
  std::vector<EdgeId> incident_edges(VertexId v) const;

  EdgeId max_edge_id() const { return edges_.empty() ? 0 : edges_.rbegin()->first; }
  VertexId max_vertex_id() const { return vertices_.empty() ? 0 : vertices_.back(); }
  /// True when the edge ids are exactly 1..m.
  bool has_contiguous_edge_ids() const;

  Graph with_incidence(EdgeId e, Incidence ends) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexId> vertices_;  // sorted, unique
  std::map<EdgeId, Incidence> edges_;
};

/// Line-oriented text format: `v <n>` declares vertices 1..n, `e <id> <u> <v>`
/// declares an edge, `#` starts a comment. Edge ids must be exactly 1..m.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

struct ValidationReport {
  std::vector<VertexId> bad_degree;                   // degree not in {1, 3}
  std::vector<std::vector<VertexId>> unbounded;       // components that are a bare edge
  bool ok() const { return bad_degree.empty() && unbounded.empty(); }
  std::string message() const;
};

/// Accepts iff every vertex has degree 1 or 3 and no component is a single edge
/// between two leaves (such an edge is unconstrained by the polytope).
ValidationReport validate_13(const Graph& g);
/// Throws GraphError carrying the report message when validation fails.
void require_13(const Graph& g);

std::vector<int> degree_sequence(const Graph& g);

struct EdgeClass {
  std::set<EdgeId> internal;
  std::set<EdgeId> external;
};

EdgeClass classify_edges(const Graph& g);
bool is_external(const Graph& g, EdgeId e);
bool is_leaf(const Graph& g, VertexId v);

std::vector<std::vector<VertexId>> components(const Graph& g);
bool is_connected(const Graph& g);
/// m - n + c, the dimension of the cycle space.
int cycle_rank(const Graph& g);
bool is_tree(const Graph& g);
bool on_cycle(const Graph& g, EdgeId e);

struct CutRecord {
  EdgeId original_edge = 0;
  std::pair<EdgeId, EdgeId> new_edges;       // e' at ends.first, e'' at ends.second
  std::pair<VertexId, VertexId> new_leaves;  // leaf of e', leaf of e''

  friend bool operator==(const CutRecord&, const CutRecord&) = default;
};

/// Splits a cycle edge into two pendant edges ending in fresh leaves. Fresh ids
/// are max id + 1 and max id + 2 (m+1, m+2 for contiguous ids).
std::pair<Graph, CutRecord> cut_edge(const Graph& g, EdgeId e);
/// Inverse of cut_edge: glue_edges(cut_edge(g, e)) == g.
Graph glue_edges(const Graph& g, const CutRecord& rec);

/// Deterministic DFS spanning tree: vertices visited from the lowest id, edges
/// explored in increasing id order.
std::set<EdgeId> spanning_tree(const Graph& g);
/// Lowest-id edge that lies on a cycle and is not forbidden.
EdgeId find_cycle_edge(const Graph& g, const std::set<EdgeId>& forbidden = {});

/// Renames edges and vertices; maps must be bijections covering g.
Graph relabel(const Graph& g, const std::map<EdgeId, EdgeId>& edge_map,
              const std::map<VertexId, VertexId>& vertex_map);

/// 64-bit FNV-1a of the canonical text form.
std::uint64_t graph_hash(const Graph& g);

}  // namespace lopoly
