#pragma once

// Reference implementations used by the tests. They work straight from the
// incidence data and share no code with the library's polytope or counting
// layers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "lopoly/graph.hpp"
#include "lopoly/nni.hpp"
#include "lopoly/rational.hpp"

namespace oracle {

using lopoly::EdgeId;
using lopoly::Graph;
using lopoly::Rational;
using lopoly::VertexId;

/// Edge ends at v, a loop listed twice.
inline std::vector<EdgeId> ends_at(const Graph& g, VertexId v) {
  std::vector<EdgeId> out;
  for (const auto& [id, inc] : g.edges()) {
    if (inc.first == v) out.push_back(id);
    if (inc.second == v) out.push_back(id);
  }
  return out;
}

/// Triangle inequalities and perimeter bound at every trivalent vertex.
inline bool in_polytope(const Graph& g, const std::vector<Rational>& w, const Rational& t, bool strict = false) {
  auto le = [strict](const Rational& x, const Rational& y) { return strict ? x < y : x <= y; };
  for (VertexId v : g.vertices()) {
    auto s = ends_at(g, v);
    if (s.size() != 3) continue;
    Rational x = w[s[0] - 1], y = w[s[1] - 1], z = w[s[2] - 1];
    if (!le(x + y + z, t) || !le(x, y + z) || !le(y, x + z) || !le(z, x + y)) return false;
  }
  return true;
}

/// Lattice points of tP_G by scanning the whole box [0, floor t]^m.
inline std::uint64_t brute_count(const Graph& g, const Rational& t, bool strict = false) {
  const std::size_t m = g.edge_count();
  const long top = lopoly::floor(t).get_si();
  if (top < 0) return 0;
  std::vector<long> x(m, 0);
  std::vector<Rational> w(m);
  std::uint64_t count = 0;
  for (;;) {
    for (std::size_t i = 0; i < m; ++i) w[i] = x[i];
    if (in_polytope(g, w, t, strict)) ++count;
    std::size_t i = 0;
    while (i < m && x[i] == top) x[i++] = 0;
    if (i == m) break;
    ++x[i];
  }
  return count;
}

/// The new weight of the pivot under a weighted move on trail (a,u,e,v,b).
inline Rational pivot_weight(const Graph& g, const std::vector<Rational>& w, const lopoly::Trail& tr) {
  auto third = [&](VertexId x, EdgeId out) {
    auto s = ends_at(g, x);
    s.erase(std::find(s.begin(), s.end(), tr.e));
    s.erase(std::find(s.begin(), s.end(), out));
    return s.front();
  };
  EdgeId c = third(tr.u, tr.a), d = third(tr.v, tr.b);
  auto W = [&](EdgeId f) { return w[f - 1]; };
  Rational p = W(tr.a) + W(c), q = W(tr.b) + W(d), r = W(tr.b) + W(c), s = W(tr.a) + W(d);
  return W(tr.e) + (p > q ? p : q) - (r > s ? r : s);
}

/// All valid NNI trails of g.
inline std::vector<lopoly::Trail> trails(const Graph& g) {
  std::vector<lopoly::Trail> out;
  for (const auto& [e, inc] : g.edges()) {
    if (inc.is_loop()) continue;
    auto su = ends_at(g, inc.first), sv = ends_at(g, inc.second);
    if (su.size() != 3 || sv.size() != 3) continue;
    for (EdgeId a : su)
      for (EdgeId b : sv) {
        if (a == e || b == e || a == b) continue;
        lopoly::Trail tr{a, inc.first, e, inc.second, b};
        if (std::find(out.begin(), out.end(), tr) == out.end()) out.push_back(tr);
      }
  }
  return out;
}

inline Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi, long den = 12) {
  std::uniform_int_distribution<long> d(1, den);
  long q = d(rng);
  Rational span = (hi - lo) * q;
  long top = lopoly::floor(span).get_si();
  std::uniform_int_distribution<long> n(0, std::max(0L, top));
  Rational r = lo + Rational(n(rng), q);
  r.canonicalize();
  return r;
}

/// A uniform-ish rational point of tP_G found by rejection from the box
/// [0, t/2]^m; every coordinate of a point of tP_G lies there.
inline std::vector<Rational> random_point(std::mt19937_64& rng, const Graph& g, const Rational& t) {
  const std::size_t m = g.edge_count();
  std::vector<Rational> w(m);
  for (int tries = 0; tries < 100000; ++tries) {
    for (auto& x : w) x = random_rational(rng, 0, t / 2);
    if (in_polytope(g, w, t)) return w;
  }
  return std::vector<Rational>(m, 0);
}

}  // namespace oracle
