#include "lopoly/nni.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace lopoly {

void check_trail(const Graph& g, const Trail& w) {
  auto fail = [](const std::string& why) { throw NniError("invalid trail: " + why); };
  if (!g.has_edge(w.a) || !g.has_edge(w.e) || !g.has_edge(w.b)) fail("unknown edge");
  if (w.a == w.e || w.a == w.b || w.e == w.b) fail("edges must be pairwise distinct");
  const Incidence& pivot = g.ends(w.e);
  if (pivot.is_loop()) fail("pivot is a loop");
  if (w.u == w.v || pivot != Incidence(w.u, w.v)) fail("pivot does not join u and v");
  if (!g.ends(w.a).touches(w.u)) fail("a is not incident to u");
  if (!g.ends(w.b).touches(w.v)) fail("b is not incident to v");
}

Graph apply_nni(const Graph& g, const Trail& w) {
  check_trail(g, w);
  Graph h = g.with_incidence(w.a, g.ends(w.a).moved(w.u, w.v));
  return h.with_incidence(w.b, g.ends(w.b).moved(w.v, w.u));
}

MoveSequence identity_sequence(const Graph& g) {
  MoveSequence s;
  for (const auto& [id, inc] : g.edges()) s.edge_relabel[id] = id;
  for (VertexId v : g.vertices()) s.vertex_relabel[v] = v;
  return s;
}

Graph replay_moves(const Graph& g, const std::vector<Trail>& moves) {
  Graph h = g;
  for (const Trail& w : moves) h = apply_nni(h, w);
  return h;
}

Graph replay(const Graph& g, const MoveSequence& seq) {
  return relabel(replay_moves(g, seq.moves), seq.edge_relabel, seq.vertex_relabel);
}

void record_snapshots(const Graph& g, MoveSequence& seq) {
  seq.snapshots.clear();
  Graph h = g;
  seq.snapshots.push_back(graph_hash(h));
  for (const Trail& w : seq.moves) {
    h = apply_nni(h, w);
    seq.snapshots.push_back(graph_hash(h));
  }
}

namespace {

void require_tree(const Graph& t, const char* op) {
  if (!is_tree(t)) throw NniError(std::string(op) + ": input is not a tree");
}

/// The unique edge joining x and y in a tree.
EdgeId edge_between(const Graph& t, VertexId x, VertexId y) {
  for (EdgeId e : t.incident_edges(x))
    if (t.ends(e) == Incidence(x, y)) return e;
  throw NniError("vertices " + std::to_string(x) + " and " + std::to_string(y) + " are not adjacent");
}

/// Edges at x whose other end is a leaf, sorted by id.
std::vector<EdgeId> leaf_edges(const Graph& t, VertexId x) {
  std::vector<EdgeId> out;
  for (EdgeId e : t.incident_edges(x)) {
    const Incidence& inc = t.ends(e);
    if (!inc.is_loop() && is_leaf(t, inc.other(x))) out.push_back(e);
  }
  return out;
}

std::map<VertexId, VertexId> bfs_parents(const Graph& t, VertexId root, VertexId& farthest) {
  std::map<VertexId, int> dist{{root, 0}};
  std::map<VertexId, VertexId> parent{{root, root}};
  std::deque<VertexId> queue{root};
  farthest = root;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (dist[x] > dist[farthest] || (dist[x] == dist[farthest] && x < farthest)) farthest = x;
    for (EdgeId e : t.incident_edges(x)) {
      VertexId y = t.ends(e).other(x);
      if (!dist.count(y)) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  return parent;
}

std::size_t spine_inversions(const std::vector<int>& s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) n += s[i] < s[j];
  return n;
}

std::vector<VertexId> raw_central_path(const Graph& c) {
  std::set<VertexId> inner;
  for (VertexId v : c.vertices())
    if (c.degree(v) > 1) inner.insert(v);
  if (inner.empty()) return {};
  auto inner_neighbors = [&](VertexId x) {
    std::vector<VertexId> out;
    for (EdgeId e : c.incident_edges(x)) {
      VertexId y = c.ends(e).other(x);
      if (inner.count(y)) out.push_back(y);
    }
    return out;
  };
  VertexId start = *inner.begin();
  for (VertexId x : inner)
    if (inner_neighbors(x).size() <= 1) {
      start = x;
      break;
    }
  std::vector<VertexId> path{start};
  VertexId prev = start;
  VertexId cur = start;
  for (;;) {
    std::optional<VertexId> next;
    for (VertexId y : inner_neighbors(cur))
      if (y != prev || path.size() == 1)
        if (y != start || path.size() > 2) next = y;
    if (!next || std::find(path.begin(), path.end(), *next) != path.end()) break;
    prev = cur;
    cur = *next;
    path.push_back(cur);
  }
  return path;
}

/// Works on a caterpillar whose central path is tracked explicitly, recording
/// every move so the caller can return a MoveSequence.
class CaterpillarEditor {
 public:
  CaterpillarEditor(Graph g, std::vector<VertexId> path) : g_(std::move(g)), path_(std::move(path)) {}

  const Graph& graph() const { return g_; }
  const std::vector<VertexId>& path() const { return path_; }
  std::vector<Trail>& moves() { return moves_; }

  /// Exchanges the spine vertices at positions q and q+1; each keeps its leaves.
  /// At an end of the path a leaf edge (other than `avoid`) plays the role of the
  /// outer path edge and travels with the position.
  bool swap_spine(std::size_t q, EdgeId avoid = 0) {
    const std::size_t k = path_.size();
    VertexId x = path_[q], y = path_[q + 1];
    std::optional<EdgeId> left, right;
    if (q > 0) {
      left = edge_between(g_, path_[q - 1], x);
    } else {
      for (EdgeId e : leaf_edges(g_, x))
        if (e != avoid) {
          left = e;
          break;
        }
    }
    if (q + 2 < k) {
      right = edge_between(g_, y, path_[q + 2]);
    } else {
      for (EdgeId e : leaf_edges(g_, y))
        if (e != avoid) {
          right = e;
          break;
        }
    }
    if (!left || !right) return false;
    apply(Trail{*left, x, edge_between(g_, x, y), y, *right});
    std::swap(path_[q], path_[q + 1]);
    return true;
  }

  /// Swaps leaf edge `lx` at position i with leaf edge `ly` at position j > i,
  /// where every position strictly between carries no leaves.
  void swap_leaves(EdgeId lx, std::size_t i, EdgeId ly, std::size_t j) {
    if (j == i + 1) {
      apply(Trail{lx, path_[i], edge_between(g_, path_[i], path_[j]), path_[j], ly});
      return;
    }
    std::vector<Trail> transport;
    auto run = [&](bool rightward) {
      std::size_t before = moves_.size();
      bool ok = true;
      if (rightward) {
        for (std::size_t q = i; q + 1 < j && ok; ++q) ok = swap_spine(q, lx);
      } else {
        for (std::size_t q = j - 1; q > i && ok; --q) ok = swap_spine(q, ly);
      }
      transport.assign(moves_.begin() + static_cast<std::ptrdiff_t>(before), moves_.end());
      return ok;
    };
    std::vector<VertexId> saved_path = path_;
    Graph saved_graph = g_;
    std::size_t saved_moves = moves_.size();
    std::size_t at_x = j - 1, at_y = j;
    if (!run(true)) {
      path_ = saved_path;
      g_ = saved_graph;
      moves_.resize(saved_moves);
      if (!run(false)) throw NniError("sort_external: cannot move leaves across a bare path");
      at_x = i;
      at_y = i + 1;
    }
    apply(Trail{lx, path_[at_x], edge_between(g_, path_[at_x], path_[at_y]), path_[at_y], ly});
    for (auto it = transport.rbegin(); it != transport.rend(); ++it) apply(it->inverse());
    path_ = saved_path;
  }

 private:
  void apply(const Trail& w) {
    g_ = apply_nni(g_, w);
    moves_.push_back(w);
  }

  Graph g_;
  std::vector<VertexId> path_;
  std::vector<Trail> moves_;
};

MoveSequence with_moves(const Graph& g, std::vector<Trail> moves) {
  MoveSequence s = identity_sequence(g);
  s.moves = std::move(moves);
  return s;
}

std::vector<std::vector<EdgeId>> leaf_groups(const Graph& c, const std::vector<VertexId>& path) {
  std::vector<std::vector<EdgeId>> groups;
  for (VertexId x : path) groups.push_back(leaf_edges(c, x));
  return groups;
}

}  // namespace

bool is_caterpillar(const Graph& t) {
  if (!is_tree(t)) return false;
  for (VertexId x : t.vertices()) {
    if (is_leaf(t, x)) continue;
    int inner = 0;
    for (EdgeId e : t.incident_edges(x)) inner += !is_leaf(t, t.ends(e).other(x));
    if (inner > 2) return false;
  }
  return true;
}

std::vector<VertexId> central_path(const Graph& c) {
  if (!is_caterpillar(c)) throw NniError("central_path: not a caterpillar");
  std::vector<VertexId> path = raw_central_path(c);
  std::vector<VertexId> rev(path.rbegin(), path.rend());
  auto degrees = [&](const std::vector<VertexId>& p) {
    std::vector<int> s;
    for (VertexId x : p) s.push_back(c.degree(x));
    return s;
  };
  std::size_t fwd = spine_inversions(degrees(path)), bwd = spine_inversions(degrees(rev));
  if (bwd < fwd || (bwd == fwd && !path.empty() && rev.front() < path.front())) return rev;
  return path;
}

std::vector<int> spine(const Graph& c) {
  std::vector<int> s;
  for (VertexId x : central_path(c)) s.push_back(c.degree(x));
  return s;
}

std::vector<VertexId> longest_path(const Graph& t) {
  require_tree(t, "longest_path");
  if (t.vertices().empty()) return {};
  VertexId far1 = 0, far2 = 0;
  bfs_parents(t, t.vertices().front(), far1);
  auto parent = bfs_parents(t, far1, far2);
  std::vector<VertexId> path{far2};
  while (path.back() != far1) path.push_back(parent.at(path.back()));
  return path;
}

MoveSequence caterpillarize(const Graph& t) {
  require_tree(t, "caterpillarize");
  Graph g = t;
  std::vector<Trail> moves;
  while (!is_caterpillar(g)) {
    std::vector<VertexId> path = longest_path(g);
    std::optional<Trail> step;
    for (const auto& [id, inc] : g.edges()) {
      auto pu = std::find(path.begin(), path.end(), inc.first);
      auto pv = std::find(path.begin(), path.end(), inc.second);
      if ((pu == path.end()) == (pv == path.end())) continue;
      VertexId u = pu != path.end() ? inc.first : inc.second;
      VertexId v = inc.other(u);
      if (is_leaf(g, u) || is_leaf(g, v)) continue;
      auto idx = static_cast<std::size_t>(std::find(path.begin(), path.end(), u) - path.begin());
      EdgeId left = edge_between(g, path[idx - 1], u);
      EdgeId right = edge_between(g, u, path[idx + 1]);
      EdgeId a = std::min(left, right);
      EdgeId b = 0;
      for (EdgeId f : g.incident_edges(v))
        if (f != id) {
          b = f;
          break;
        }
      step = Trail{a, u, id, v, b};
      break;
    }
    if (!step) throw NniError("caterpillarize: no off-path internal edge found");
    g = apply_nni(g, *step);
    moves.push_back(*step);
  }
  return with_moves(t, std::move(moves));
}

MoveSequence order_spine(const Graph& c) {
  if (!is_caterpillar(c)) throw NniError("order_spine: not a caterpillar");
  CaterpillarEditor ed(c, central_path(c));
  const std::size_t k = ed.path().size();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q + 1 < k; ++q) {
      if (c.degree(ed.path()[q]) < c.degree(ed.path()[q + 1])) {
        if (!ed.swap_spine(q)) throw NniError("order_spine: spine end without a leaf");
        changed = true;
      }
    }
  }
  return with_moves(c, std::move(ed.moves()));
}

std::vector<EdgeId> external_order(const Graph& c) {
  std::vector<EdgeId> out;
  for (const auto& group : leaf_groups(c, central_path(c))) out.insert(out.end(), group.begin(), group.end());
  if (out.empty()) {
    for (const auto& [id, inc] : c.edges()) out.push_back(id);
  }
  return out;
}

namespace {

std::vector<std::size_t> target_keys_for(const std::vector<std::vector<EdgeId>>& groups,
                                         const std::vector<EdgeId>& target, std::map<EdgeId, std::size_t>& key) {
  std::vector<std::size_t> sizes;
  for (const auto& gr : groups) sizes.push_back(gr.size());
  key.clear();
  std::size_t pos = 0;
  for (std::size_t gi = 0; gi < groups.size(); ++gi)
    for (std::size_t r = 0; r < sizes[gi]; ++r) key[target[pos++]] = gi;
  return sizes;
}

std::size_t key_inversions(const std::vector<std::vector<EdgeId>>& groups, const std::map<EdgeId, std::size_t>& key) {
  std::vector<std::size_t> flat;
  for (const auto& gr : groups)
    for (EdgeId e : gr) flat.push_back(key.at(e));
  std::size_t n = 0;
  for (std::size_t i = 0; i < flat.size(); ++i)
    for (std::size_t j = i + 1; j < flat.size(); ++j) n += flat[i] > flat[j];
  return n;
}

}  // namespace

MoveSequence sort_external(const Graph& c, const std::vector<EdgeId>& target) {
  if (!is_caterpillar(c)) throw NniError("sort_external: not a caterpillar");
  EdgeClass cls = classify_edges(c);
  std::vector<EdgeId> sorted_target = target;
  std::sort(sorted_target.begin(), sorted_target.end());
  if (!std::equal(sorted_target.begin(), sorted_target.end(), cls.external.begin(), cls.external.end()))
    throw NniError("sort_external: target is not a permutation of the external edges");

  std::vector<VertexId> path = central_path(c);
  if (path.size() <= 1) return identity_sequence(c);

  // Either orientation works when the leaf-count profile is symmetric; take the
  // one that needs fewer swaps.
  std::map<EdgeId, std::size_t> key;
  auto groups = leaf_groups(c, path);
  auto sizes = target_keys_for(groups, target, key);
  std::vector<std::size_t> rsizes(sizes.rbegin(), sizes.rend());
  if (rsizes == sizes) {
    std::vector<VertexId> rpath(path.rbegin(), path.rend());
    std::map<EdgeId, std::size_t> rkey;
    auto rgroups = leaf_groups(c, rpath);
    target_keys_for(rgroups, target, rkey);
    if (key_inversions(rgroups, rkey) < key_inversions(groups, key)) {
      path = rpath;
      key = rkey;
    }
  }

  CaterpillarEditor ed(c, path);
  for (;;) {
    auto current = leaf_groups(ed.graph(), ed.path());
    bool swapped = false;
    std::optional<std::size_t> prev;
    for (std::size_t gi = 0; gi < current.size() && !swapped; ++gi) {
      if (current[gi].empty()) continue;
      if (prev) {
        const auto& left = current[*prev];
        const auto& right = current[gi];
        EdgeId x = *std::max_element(left.begin(), left.end(), [&](EdgeId p, EdgeId q) {
          return key[p] < key[q] || (key[p] == key[q] && p > q);
        });
        EdgeId y = *std::min_element(right.begin(), right.end(), [&](EdgeId p, EdgeId q) {
          return key[p] < key[q] || (key[p] == key[q] && p < q);
        });
        if (key[x] > key[y]) {
          ed.swap_leaves(x, *prev, y, gi);
          swapped = true;
        }
      }
      prev = gi;
    }
    if (!swapped) break;
  }
  return with_moves(c, std::move(ed.moves()));
}

namespace {

/// Structural bijection between two caterpillars whose leaf groups coincide
/// position by position (in one of the two orientations of the second path).
std::pair<std::map<EdgeId, EdgeId>, std::map<VertexId, VertexId>> match_caterpillars(const Graph& c1,
                                                                                     const Graph& c2) {
  std::map<EdgeId, EdgeId> em;
  std::map<VertexId, VertexId> vm;
  std::vector<VertexId> p1 = central_path(c1);
  std::vector<VertexId> p2 = central_path(c2);
  if (p1.size() != p2.size()) throw NniError("caterpillars have different central paths");
  if (p1.empty()) {
    // a single edge between two leaves
    for (const auto& [id, inc] : c1.edges()) {
      const Incidence& other = c2.ends(id);
      em[id] = id;
      vm[inc.first] = other.first;
      vm[inc.second] = other.second;
    }
    return {em, vm};
  }
  auto as_sets = [](std::vector<std::vector<EdgeId>> g) {
    for (auto& x : g) std::sort(x.begin(), x.end());
    return g;
  };
  auto g1 = as_sets(leaf_groups(c1, p1));
  if (as_sets(leaf_groups(c2, p2)) != g1) {
    std::reverse(p2.begin(), p2.end());
    if (as_sets(leaf_groups(c2, p2)) != g1) throw NniError("caterpillars differ in leaf placement");
  }
  for (std::size_t i = 0; i < p1.size(); ++i) {
    vm[p1[i]] = p2[i];
    if (i + 1 < p1.size()) em[edge_between(c1, p1[i], p1[i + 1])] = edge_between(c2, p2[i], p2[i + 1]);
    for (EdgeId e : leaf_edges(c1, p1[i])) {
      em[e] = e;
      vm[c1.ends(e).other(p1[i])] = c2.ends(e).other(p2[i]);
    }
  }
  return {em, vm};
}

void require_same_labels(const Graph& g, const Graph& g2, const char* op) {
  std::string prefix = std::string(op) + ": ";
  if (g.vertices() != g2.vertices()) throw NniError(prefix + "vertex sets differ");
  std::vector<EdgeId> e1, e2;
  for (const auto& [id, inc] : g.edges()) e1.push_back(id);
  for (const auto& [id, inc] : g2.edges()) e2.push_back(id);
  if (e1 != e2) throw NniError(prefix + "edge sets differ");
  if (degree_sequence(g) != degree_sequence(g2)) throw NniError(prefix + "degree sequences differ");
  if (classify_edges(g).external != classify_edges(g2).external)
    throw NniError(prefix + "external edge sets differ");
}

}  // namespace

MoveSequence tree_sequence(const Graph& t, const Graph& t2) {
  require_tree(t, "tree_sequence");
  require_tree(t2, "tree_sequence");
  require_same_labels(t, t2, "tree_sequence");

  auto normalize = [](const Graph& x, std::vector<Trail>& moves) {
    MoveSequence s1 = caterpillarize(x);
    Graph c = replay_moves(x, s1.moves);
    MoveSequence s2 = order_spine(c);
    moves = s1.moves;
    moves.insert(moves.end(), s2.moves.begin(), s2.moves.end());
    return replay_moves(c, s2.moves);
  };
  std::vector<Trail> fwd, back;
  Graph c1 = normalize(t, fwd);
  Graph c2 = normalize(t2, back);

  MoveSequence sorting = sort_external(c1, external_order(c2));
  fwd.insert(fwd.end(), sorting.moves.begin(), sorting.moves.end());
  Graph c1s = replay_moves(c1, sorting.moves);

  auto [em, vm] = match_caterpillars(c1s, c2);
  std::map<EdgeId, EdgeId> em_inv;
  std::map<VertexId, VertexId> vm_inv;
  for (const auto& [x, y] : em) em_inv[y] = x;
  for (const auto& [x, y] : vm) vm_inv[y] = x;
  for (auto it = back.rbegin(); it != back.rend(); ++it) {
    Trail w = it->inverse();
    fwd.push_back(Trail{em_inv.at(w.a), vm_inv.at(w.u), em_inv.at(w.e), vm_inv.at(w.v), em_inv.at(w.b)});
  }

  MoveSequence out;
  out.moves = std::move(fwd);
  out.edge_relabel = std::move(em);
  out.vertex_relabel = std::move(vm);
  return out;
}

namespace {

MoveSequence graph_sequence_rec(const Graph& g, const Graph& g2, const std::set<EdgeId>* tree,
                                const std::set<EdgeId>* tree2) {
  if (cycle_rank(g) == 0) return tree_sequence(g, g2);

  EdgeId e = find_cycle_edge(g, tree ? *tree : std::set<EdgeId>{});
  EdgeId e2 = find_cycle_edge(g2, tree2 ? *tree2 : std::set<EdgeId>{});

  // Give the chosen cycle edge of g2 the same label as in g.
  std::map<EdgeId, EdgeId> swap;
  for (const auto& [id, inc] : g2.edges()) swap[id] = id == e ? e2 : id == e2 ? e : id;
  std::map<VertexId, VertexId> vid;
  for (VertexId v : g2.vertices()) vid[v] = v;
  Graph g2s = relabel(g2, swap, vid);

  auto [h, rec] = cut_edge(g, e);
  auto [h2, rec2] = cut_edge(g2s, e);
  if (rec.new_edges != rec2.new_edges || rec.new_leaves != rec2.new_leaves)
    throw NniError("graph_sequence: cut records disagree");

  std::set<EdgeId> sub_tree, sub_tree2;
  if (tree) {
    sub_tree = *tree;
    for (EdgeId f : *tree2) sub_tree2.insert(swap.at(f));
    for (EdgeId f : {rec.new_edges.first, rec.new_edges.second}) {
      sub_tree.insert(f);
      sub_tree2.insert(f);
    }
  }
  MoveSequence sub = graph_sequence_rec(h, h2, tree ? &sub_tree : nullptr, tree ? &sub_tree2 : nullptr);

  auto glue_id = [&](EdgeId f) { return f == rec.new_edges.first || f == rec.new_edges.second ? e : f; };
  MoveSequence out;
  for (const Trail& w : sub.moves) {
    Trail gw{glue_id(w.a), w.u, w.e, w.v, glue_id(w.b)};
    if (gw.a == e && gw.b == e) continue;  // both halves of e: no-op after gluing
    out.moves.push_back(gw);
  }
  for (const auto& [id, inc] : g.edges()) {
    EdgeId mapped = id == e ? e : sub.edge_relabel.at(id);
    out.edge_relabel[id] = swap.at(mapped);
  }
  for (VertexId v : g.vertices()) {
    VertexId mapped = sub.vertex_relabel.at(v);
    if (!g.has_vertex(mapped)) throw NniError("graph_sequence: relabel moved a cut leaf");
    out.vertex_relabel[v] = mapped;
  }
  return out;
}

}  // namespace

MoveSequence graph_sequence(const Graph& g, const Graph& g2, bool restrict_to_spanning_trees) {
  if (!is_connected(g) || !is_connected(g2)) throw NniError("graph_sequence: inputs must be connected");
  require_same_labels(g, g2, "graph_sequence");
  if (!restrict_to_spanning_trees) return graph_sequence_rec(g, g2, nullptr, nullptr);
  std::set<EdgeId> tree = spanning_tree(g);
  std::set<EdgeId> tree2 = spanning_tree(g2);
  MoveSequence out = graph_sequence_rec(g, g2, &tree, &tree2);
  out.source_tree = tree;
  out.target_tree = tree2;
  return out;
}

}  // namespace lopoly
