#include "lopoly/weighted_nni.hpp"

#include <algorithm>

namespace lopoly {

Rational weight(const Weighting& w, EdgeId e) {
  if (e < 1 || static_cast<std::size_t>(e) > w.size())
    throw GraphError("weighting has no entry for edge " + std::to_string(e));
  return w[static_cast<std::size_t>(e - 1)];
}

namespace {

EdgeId remaining_slot(const Graph& g, VertexId x, EdgeId pivot, EdgeId attached) {
  std::vector<EdgeId> slots = g.slots(x);
  if (slots.size() != 3)
    throw NniError("pivot endpoint " + std::to_string(x) + " does not have degree 3");
  for (EdgeId drop : {pivot, attached}) {
    auto it = std::find(slots.begin(), slots.end(), drop);
    if (it == slots.end()) throw NniError("edge " + std::to_string(drop) + " is not incident to vertex " + std::to_string(x));
    slots.erase(it);
  }
  return slots.front();
}

void add(IntVector& v, EdgeId e, int s) { v[static_cast<std::size_t>(e - 1)] += s; }

}  // namespace

NniSite resolve_site(const Graph& g, const Trail& w) {
  check_trail(g, w);
  return NniSite{w, remaining_slot(g, w.u, w.e, w.a), remaining_slot(g, w.v, w.e, w.b)};
}

Rational pivot_update(const Weighting& w, const NniSite& s) {
  Rational wa = weight(w, s.trail.a), wb = weight(w, s.trail.b);
  Rational wc = weight(w, s.c), wd = weight(w, s.d);
  return weight(w, s.trail.e) + std::max<Rational>(wa + wc, wb + wd) - std::max<Rational>(wb + wc, wa + wd);
}

Weighting weighted_step(const Weighting& w, const NniSite& site) {
  Weighting out = w;
  out[static_cast<std::size_t>(site.trail.e - 1)] = pivot_update(w, site);
  return out;
}

std::pair<Graph, Weighting> apply_weighted_nni(const Graph& g, const Weighting& w, const NniSite& site) {
  if (resolve_site(g, site.trail) != site) throw NniError("site does not match the graph");
  return {apply_nni(g, site.trail), weighted_step(w, site)};
}

std::pair<Graph, Weighting> replay_weighted(const Graph& g, const Weighting& w, const std::vector<Trail>& moves) {
  Graph h = g;
  Weighting x = w;
  for (const Trail& t : moves) {
    NniSite site = resolve_site(h, t);
    x = weighted_step(x, site);
    h = apply_nni(h, t);
  }
  return {h, x};
}

char case_letter(PieceCase k) { return "ABCD"[static_cast<int>(k)]; }

IntVector first_normal(const NniSite& s, std::size_t m) {
  IntVector n(m, 0);
  add(n, s.trail.a, 1);
  add(n, s.c, 1);
  add(n, s.trail.b, -1);
  add(n, s.d, -1);
  return n;
}

IntVector second_normal(const NniSite& s, std::size_t m) {
  IntVector n(m, 0);
  add(n, s.trail.a, 1);
  add(n, s.d, 1);
  add(n, s.trail.b, -1);
  add(n, s.c, -1);
  return n;
}

PieceCase case_of(const Weighting& w, const NniSite& s) {
  bool first = dot(first_normal(s, w.size()), w) >= 0;
  bool second = dot(second_normal(s, w.size()), w) >= 0;
  if (first) return second ? PieceCase::A : PieceCase::B;
  return second ? PieceCase::C : PieceCase::D;
}

IntVector case_row(const NniSite& s, PieceCase k, std::size_t m) {
  IntVector row(m, 0);
  add(row, s.trail.e, 1);
  const Trail& t = s.trail;
  switch (k) {
    case PieceCase::A: add(row, s.c, 1), add(row, s.d, -1); break;
    case PieceCase::B: add(row, t.a, 1), add(row, t.b, -1); break;
    case PieceCase::C: add(row, t.b, 1), add(row, t.a, -1); break;
    case PieceCase::D: add(row, s.d, 1), add(row, s.c, -1); break;
  }
  return row;
}

UnimodularMap UnimodularMap::identity(std::size_t m) { return UnimodularMap{identity_matrix(m), IntVector(m, 0)}; }

RatVector UnimodularMap::apply(const RatVector& w) const {
  RatVector out = multiply(matrix, w);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += offset[i];
  return out;
}

UnimodularMap UnimodularMap::after(const UnimodularMap& other) const {
  IntVector off = multiply(matrix, other.offset);
  for (std::size_t i = 0; i < off.size(); ++i) off[i] += offset[i];
  return UnimodularMap{multiply(matrix, other.matrix), std::move(off)};
}

UnimodularMap case_matrix(const NniSite& site, PieceCase k, std::size_t m) {
  UnimodularMap u = UnimodularMap::identity(m);
  u.matrix[static_cast<std::size_t>(site.trail.e - 1)] = case_row(site, k, m);
  return u;
}

std::vector<Hyperplane> site_hyperplanes(const NniSite& site, std::size_t m) {
  std::vector<Hyperplane> out;
  for (IntVector n : {first_normal(site, m), second_normal(site, m)}) {
    if (is_zero(n)) continue;
    Integer g = 0;
    for (const auto& x : n) g = gcd(g, x);
    for (auto& x : n) x /= g;
    IntVector neg = n;
    for (auto& x : neg) x = -x;
    bool dup = std::any_of(out.begin(), out.end(), [&](const Hyperplane& h) { return h.normal == n || h.normal == neg; });
    if (!dup) out.push_back(Hyperplane{std::move(n)});
  }
  return out;
}

}  // namespace lopoly
