#include "lopoly/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace lopoly {

Graph::Graph(std::vector<VertexId> vertices, std::map<EdgeId, Incidence> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw GraphError("duplicate vertex id");
  for (const auto& [id, inc] : edges_) {
    if (id <= 0) throw GraphError("edge ids must be positive");
    if (!has_vertex(inc.first) || !has_vertex(inc.second))
      throw GraphError("edge " + std::to_string(id) + " references an unknown vertex");
  }
}

bool Graph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

const Incidence& Graph::ends(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw GraphError("no edge " + std::to_string(e));
  return it->second;
}

int Graph::degree(VertexId v) const {
  int d = 0;
  for (const auto& [id, inc] : edges_) d += (inc.first == v) + (inc.second == v);
  return d;
}

std::vector<EdgeId> Graph::slots(VertexId v) const {
  std::vector<EdgeId> out;
  for (const auto& [id, inc] : edges_) {
    if (inc.first == v) out.push_back(id);
    if (inc.second == v) out.push_back(id);
  }
  return out;
}

std::vector<EdgeId> Graph::incident_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (const auto& [id, inc] : edges_)
    if (inc.touches(v)) out.push_back(id);
  return out;
}

bool Graph::has_contiguous_edge_ids() const {
  return edges_.empty() || (edges_.begin()->first == 1 && max_edge_id() == static_cast<EdgeId>(edges_.size()));
}

Graph Graph::with_incidence(EdgeId e, Incidence inc) const {
  Graph g = *this;
  auto it = g.edges_.find(e);
  if (it == g.edges_.end()) throw GraphError("no edge " + std::to_string(e));
  if (!has_vertex(inc.first) || !has_vertex(inc.second)) throw GraphError("unknown vertex");
  it->second = inc;
  return g;
}

// ---------------------------------------------------------------------------
// Text format

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::map<EdgeId, Incidence> edges;
  std::map<EdgeId, int> edge_line;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t pos = 0;
        long long x = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        nums.push_back(x);
      } catch (const std::exception&) {
        throw ParseError(lineno, "expected an integer, got '" + tok + "'");
      }
    }
    if (tag == "v") {
      if (nums.size() != 1) throw ParseError(lineno, "expected 'v <n>'");
      if (n >= 0) throw ParseError(lineno, "duplicate vertex declaration");
      if (nums[0] < 0) throw ParseError(lineno, "vertex count must be nonnegative");
      n = static_cast<int>(nums[0]);
    } else if (tag == "e") {
      if (nums.size() != 3) throw ParseError(lineno, "expected 'e <id> <u> <v>'");
      if (n < 0) throw ParseError(lineno, "edge before vertex declaration");
      auto id = static_cast<EdgeId>(nums[0]);
      if (id <= 0) throw ParseError(lineno, "edge ids must be positive");
      if (edges.count(id)) throw ParseError(lineno, "duplicate edge id " + std::to_string(id));
      for (int k = 1; k <= 2; ++k)
        if (nums[k] < 1 || nums[k] > n)
          throw ParseError(lineno, "dangling vertex reference " + std::to_string(nums[k]));
      edges.emplace(id, Incidence(static_cast<VertexId>(nums[1]), static_cast<VertexId>(nums[2])));
      edge_line[id] = lineno;
    } else {
      throw ParseError(lineno, "unknown record '" + tag + "'");
    }
  }
  if (n < 0) throw ParseError(lineno, "missing vertex declaration");
  EdgeId expect = 1;
  for (const auto& [id, inc] : edges) {
    if (id != expect)
      throw ParseError(edge_line.at(id), "edge ids must be 1..m; missing " + std::to_string(expect));
    ++expect;
  }
  std::vector<VertexId> vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), 1);
  return Graph(std::move(vs), std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  bool standard = true;
  for (std::size_t i = 0; i < g.vertices().size(); ++i)
    standard = standard && g.vertices()[i] == static_cast<VertexId>(i + 1);
  if (standard) {
    out << "v " << g.vertex_count() << "\n";
  } else {
    out << "# vertices:";
    for (VertexId v : g.vertices()) out << ' ' << v;
    out << "\n";
  }
  for (const auto& [id, inc] : g.edges()) out << "e " << id << ' ' << inc.first << ' ' << inc.second << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Structure

std::vector<std::vector<VertexId>> components(const Graph& g) {
  std::map<VertexId, VertexId> parent;
  for (VertexId v : g.vertices()) parent[v] = v;
  std::function<VertexId(VertexId)> find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [id, inc] : g.edges()) {
    VertexId a = find(inc.first), b = find(inc.second);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<VertexId, std::vector<VertexId>> groups;
  for (VertexId v : g.vertices()) groups[find(v)].push_back(v);
  std::vector<std::vector<VertexId>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

int cycle_rank(const Graph& g) {
  return static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) +
         static_cast<int>(components(g).size());
}

bool is_tree(const Graph& g) { return is_connected(g) && g.edge_count() + 1 == g.vertex_count(); }

bool on_cycle(const Graph& g, EdgeId e) {
  const Incidence& inc = g.ends(e);
  if (inc.is_loop()) return true;
  std::map<EdgeId, Incidence> rest = g.edges();
  rest.erase(e);
  Graph h(g.vertices(), std::move(rest));
  for (const auto& comp : components(h)) {
    bool a = std::find(comp.begin(), comp.end(), inc.first) != comp.end();
    bool b = std::find(comp.begin(), comp.end(), inc.second) != comp.end();
    if (a || b) return a && b;
  }
  return false;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out;
  out.reserve(g.vertex_count());
  for (VertexId v : g.vertices()) out.push_back(g.degree(v));
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool is_leaf(const Graph& g, VertexId v) { return g.degree(v) == 1; }

bool is_external(const Graph& g, EdgeId e) {
  const Incidence& inc = g.ends(e);
  return is_leaf(g, inc.first) || is_leaf(g, inc.second);
}

EdgeClass classify_edges(const Graph& g) {
  EdgeClass out;
  for (const auto& [id, inc] : g.edges())
    (is_external(g, id) ? out.external : out.internal).insert(id);
  return out;
}

std::string ValidationReport::message() const {
  if (ok()) return "ok";
  std::ostringstream out;
  if (!bad_degree.empty()) {
    out << "vertices with degree not in {1,3}:";
    for (VertexId v : bad_degree) out << ' ' << v;
  }
  for (const auto& comp : unbounded) {
    if (out.tellp() > 0) out << "; ";
    out << "unconstrained single-edge component {" << comp[0] << ',' << comp[1] << '}';
  }
  return out.str();
}

ValidationReport validate_13(const Graph& g) {
  ValidationReport r;
  for (VertexId v : g.vertices()) {
    int d = g.degree(v);
    if (d != 1 && d != 3) r.bad_degree.push_back(v);
  }
  for (const auto& comp : components(g)) {
    if (comp.size() == 2 && g.degree(comp[0]) == 1 && g.degree(comp[1]) == 1) r.unbounded.push_back(comp);
  }
  return r;
}

void require_13(const Graph& g) {
  auto r = validate_13(g);
  if (!r.ok()) throw GraphError("not a {1,3}-graph: " + r.message());
}

// ---------------------------------------------------------------------------
// Surgery

std::pair<Graph, CutRecord> cut_edge(const Graph& g, EdgeId e) {
  if (!g.has_edge(e)) throw GraphError("no edge " + std::to_string(e));
  if (!on_cycle(g, e)) throw GraphError("edge " + std::to_string(e) + " is not on a cycle");
  const Incidence inc = g.ends(e);
  CutRecord rec;
  rec.original_edge = e;
  EdgeId m = g.max_edge_id();
  VertexId n = g.max_vertex_id();
  rec.new_edges = {m + 1, m + 2};
  rec.new_leaves = {n + 1, n + 2};
  std::vector<VertexId> vs = g.vertices();
  vs.push_back(n + 1);
  vs.push_back(n + 2);
  std::map<EdgeId, Incidence> es = g.edges();
  es.erase(e);
  es.emplace(m + 1, Incidence(inc.first, n + 1));
  es.emplace(m + 2, Incidence(inc.second, n + 2));
  return {Graph(std::move(vs), std::move(es)), rec};
}

Graph glue_edges(const Graph& g, const CutRecord& rec) {
  auto [e1, e2] = rec.new_edges;
  auto [l1, l2] = rec.new_leaves;
  if (!g.has_edge(e1) || !g.has_edge(e2) || !g.has_vertex(l1) || !g.has_vertex(l2))
    throw GraphError("cut record does not match graph");
  if (g.has_edge(rec.original_edge)) throw GraphError("original edge id already present");
  const Incidence& i1 = g.ends(e1);
  const Incidence& i2 = g.ends(e2);
  if (g.degree(l1) != 1 || g.degree(l2) != 1 || !i1.touches(l1) || !i2.touches(l2) || i1.is_loop() ||
      i2.is_loop())
    throw GraphError("cut record edges are not external pendant edges");
  std::vector<VertexId> vs;
  for (VertexId v : g.vertices())
    if (v != l1 && v != l2) vs.push_back(v);
  std::map<EdgeId, Incidence> es = g.edges();
  es.erase(e1);
  es.erase(e2);
  es.emplace(rec.original_edge, Incidence(i1.other(l1), i2.other(l2)));
  return Graph(std::move(vs), std::move(es));
}

std::set<EdgeId> spanning_tree(const Graph& g) {
  if (!is_connected(g)) throw GraphError("spanning_tree: graph is disconnected");
  std::set<EdgeId> tree;
  if (g.vertices().empty()) return tree;
  std::set<VertexId> seen;
  std::function<void(VertexId)> dfs = [&](VertexId x) {
    seen.insert(x);
    for (EdgeId e : g.incident_edges(x)) {
      VertexId y = g.ends(e).other(x);
      if (!seen.count(y)) {
        tree.insert(e);
        dfs(y);
      }
    }
  };
  dfs(g.vertices().front());
  return tree;
}

EdgeId find_cycle_edge(const Graph& g, const std::set<EdgeId>& forbidden) {
  for (const auto& [id, inc] : g.edges())
    if (!forbidden.count(id) && on_cycle(g, id)) return id;
  throw GraphError("no admissible cycle edge");
}

Graph relabel(const Graph& g, const std::map<EdgeId, EdgeId>& edge_map,
              const std::map<VertexId, VertexId>& vertex_map) {
  auto vmap = [&](VertexId v) {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end()) throw GraphError("vertex relabel misses " + std::to_string(v));
    return it->second;
  };
  std::vector<VertexId> vs;
  for (VertexId v : g.vertices()) vs.push_back(vmap(v));
  std::map<EdgeId, Incidence> es;
  for (const auto& [id, inc] : g.edges()) {
    auto it = edge_map.find(id);
    if (it == edge_map.end()) throw GraphError("edge relabel misses " + std::to_string(id));
    if (!es.emplace(it->second, Incidence(vmap(inc.first), vmap(inc.second))).second)
      throw GraphError("edge relabel is not injective");
  }
  return Graph(std::move(vs), std::move(es));
}

std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::int64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<std::uint64_t>(x >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  for (VertexId v : g.vertices()) mix(v);
  mix(-1);
  for (const auto& [id, inc] : g.edges()) {
    mix(id);
    mix(inc.first);
    mix(inc.second);
  }
  return h;
}

}  // namespace lopoly
