#include "lopoly/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace lopoly {

namespace {

Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<VertexId> vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), 1);
  std::map<EdgeId, Incidence> es;
  EdgeId id = 1;
  for (const auto& [x, y] : edges) es[id++] = Incidence(x, y);
  return Graph(std::move(vs), std::move(es));
}

/// Leaf counts per degree-3 vertex plus the symmetric multiplicity matrix
/// among them (diagonal = loops).
struct Core {
  std::vector<int> leaves;
  std::vector<std::vector<int>> mult;

  std::vector<int> key(const std::vector<int>& perm) const {
    const std::size_t n = leaves.size();
    std::vector<int> k;
    k.reserve(n + n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i) k.push_back(leaves[static_cast<std::size_t>(perm[i])]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        k.push_back(mult[static_cast<std::size_t>(perm[i])][static_cast<std::size_t>(perm[j])]);
    return k;
  }

  /// Lexicographically smallest key over all orderings of the core.
  std::vector<int> canonical_key() const {
    std::vector<int> perm(leaves.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best = key(perm);
    while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, key(perm));
    return best;
  }

  static Core from_key(const std::vector<int>& k, std::size_t n) {
    Core c;
    c.leaves.assign(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n));
    c.mult.assign(n, std::vector<int>(n, 0));
    std::size_t pos = n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) c.mult[i][j] = c.mult[j][i] = k[pos++];
    return c;
  }

  Graph build() const {
    const int n3 = static_cast<int>(leaves.size());
    std::vector<std::pair<VertexId, VertexId>> edges;
    int next_leaf = n3 + 1;
    for (int i = 0; i < n3; ++i)
      for (int l = 0; l < leaves[static_cast<std::size_t>(i)]; ++l) edges.emplace_back(i + 1, next_leaf++);
    for (int i = 0; i < n3; ++i)
      for (int j = i; j < n3; ++j)
        for (int r = 0; r < mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; ++r)
          edges.emplace_back(i + 1, j + 1);
    return from_edges(next_leaf - 1, edges);
  }
};

Core core_of(const Graph& g) {
  require_13(g);
  std::map<VertexId, std::size_t> index;
  for (VertexId v : g.vertices())
    if (g.degree(v) == 3) index.emplace(v, index.size());
  Core c;
  c.leaves.assign(index.size(), 0);
  c.mult.assign(index.size(), std::vector<int>(index.size(), 0));
  for (const auto& [id, inc] : g.edges()) {
    bool a = index.count(inc.first), b = index.count(inc.second);
    if (a && b) {
      std::size_t i = index[inc.first], j = index[inc.second];
      ++c.mult[i][j];
      if (i != j) ++c.mult[j][i];
    } else if (a) {
      ++c.leaves[index[inc.first]];
    } else if (b) {
      ++c.leaves[index[inc.second]];
    }
  }
  return c;
}

void fill_matrix(std::size_t i, std::size_t j, std::vector<int>& rem, Core& c,
                 std::map<std::vector<int>, Graph>& out, int m) {
  const std::size_t n = c.leaves.size();
  if (i == n) {
    Graph g = c.build();
    if (static_cast<int>(g.edge_count()) == m && is_connected(g)) {
      std::vector<int> k = c.canonical_key();
      if (!out.count(k)) out.emplace(k, Core::from_key(k, n).build());
    }
    return;
  }
  if (j == n) {
    if (rem[i] == 0) fill_matrix(i + 1, i + 1, rem, c, out, m);
    return;
  }
  if (j == i) {
    for (int loops = 0; 2 * loops <= rem[i]; ++loops) {
      c.mult[i][i] = loops;
      rem[i] -= 2 * loops;
      fill_matrix(i, j + 1, rem, c, out, m);
      rem[i] += 2 * loops;
    }
    c.mult[i][i] = 0;
    return;
  }
  for (int k = 0; k <= std::min(rem[i], rem[j]); ++k) {
    c.mult[i][j] = c.mult[j][i] = k;
    rem[i] -= k;
    rem[j] -= k;
    fill_matrix(i, j + 1, rem, c, out, m);
    rem[i] += k;
    rem[j] += k;
  }
  c.mult[i][j] = c.mult[j][i] = 0;
}

void leaf_distributions(std::size_t pos, int left, int cap, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
  if (pos == cur.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (int l = std::min(cap, left); l >= 0; --l) {
    cur[pos] = l;
    leaf_distributions(pos + 1, left - l, l, cur, out);
  }
}

}  // namespace

Graph claw() { return from_edges(4, {{1, 2}, {1, 3}, {1, 4}}); }
Graph theta() { return from_edges(2, {{1, 2}, {1, 2}, {1, 2}}); }
Graph dumbbell() { return from_edges(2, {{1, 1}, {2, 2}, {1, 2}}); }
Graph k4() { return from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }
Graph looped_tripod() { return from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 2}, {3, 3}, {4, 4}}); }

Graph caterpillar_tree(int k) {
  if (k < 1) throw GraphError("caterpillar_tree: need at least one degree-3 vertex");
  if (k == 1) return claw();
  std::vector<std::pair<VertexId, VertexId>> edges;
  int leaf = k + 1;
  for (int i = 1; i <= k; ++i) {
    int count = (i == 1 || i == k) ? 2 : 1;
    for (int r = 0; r < count; ++r) edges.emplace_back(i, leaf++);
  }
  for (int i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
  return from_edges(leaf - 1, edges);
}

Graph spider_tree() {
  return from_edges(10, {{2, 5}, {2, 6}, {3, 7}, {3, 8}, {4, 9}, {4, 10}, {1, 2}, {1, 3}, {1, 4}});
}

std::vector<std::string> graph_names() {
  return {"claw", "theta", "dumbbell", "k4", "t4", "spider", "caterpillar-<k>"};
}

Graph named_graph(const std::string& name) {
  if (name == "claw") return claw();
  if (name == "theta") return theta();
  if (name == "dumbbell") return dumbbell();
  if (name == "k4") return k4();
  if (name == "t4") return looped_tripod();
  if (name == "spider") return spider_tree();
  const std::string prefix = "caterpillar-";
  if (name.rfind(prefix, 0) == 0) {
    try {
      return caterpillar_tree(std::stoi(name.substr(prefix.size())));
    } catch (const std::logic_error&) {
    }
  }
  throw GraphError("unknown graph name '" + name + "'");
}

std::string canonical_form(const Graph& g) {
  Core c = core_of(g);
  std::vector<int> k = c.canonical_key();
  std::ostringstream os;
  os << c.leaves.size() << ':';
  for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  // Leaf-leaf components carry no core information; count them separately.
  std::size_t bare = 0;
  for (const auto& [id, inc] : g.edges())
    bare += g.degree(inc.first) == 1 && g.degree(inc.second) == 1;
  os << ';' << bare;
  return os.str();
}

bool isomorphic(const Graph& g, const Graph& h) { return canonical_form(g) == canonical_form(h); }

std::vector<Graph> connected_graphs(int m) {
  std::map<std::vector<int>, Graph> found;
  for (int n3 = 1; 3 * n3 <= 2 * m; ++n3) {
    int n1 = 2 * m - 3 * n3;
    if (n1 > 3 * n3) continue;
    std::vector<int> cur(static_cast<std::size_t>(n3), 0);
    std::vector<std::vector<int>> dists;
    leaf_distributions(0, n1, 3, cur, dists);
    for (const auto& leaves : dists) {
      Core c;
      c.leaves = leaves;
      c.mult.assign(static_cast<std::size_t>(n3), std::vector<int>(static_cast<std::size_t>(n3), 0));
      std::vector<int> rem(static_cast<std::size_t>(n3));
      for (int i = 0; i < n3; ++i) rem[static_cast<std::size_t>(i)] = 3 - leaves[static_cast<std::size_t>(i)];
      fill_matrix(0, 0, rem, c, found, m);
    }
  }
  std::vector<Graph> out;
  for (auto& [k, g] : found) out.push_back(std::move(g));
  std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return a.vertex_count() < b.vertex_count();
  });
  return out;
}

std::vector<Graph> trees(int m) {
  std::vector<Graph> out;
  for (Graph& g : connected_graphs(m))
    if (is_tree(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace lopoly
