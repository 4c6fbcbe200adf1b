#pragma once

// Weighted NNI: the move on the graph together with the piecewise-linear
// update of the pivot weight, its four linear cases, and their matrices.

#include <string>
#include <utility>
#include <vector>

#include "lopoly/graph.hpp"
#include "lopoly/linear.hpp"
#include "lopoly/nni.hpp"
#include "lopoly/rational.hpp"

namespace lopoly {

/// Weights indexed by edge id: w[e - 1] is the weight of edge e.
using Weighting = RatVector;

Rational weight(const Weighting& w, EdgeId e);

/// A trail plus the remaining slot at each pivot endpoint.
struct NniSite {
  Trail trail;
  EdgeId c = 0;  // third slot at u
  EdgeId d = 0;  // third slot at v

  friend bool operator==(const NniSite&, const NniSite&) = default;
};

/// Removes one slot of e and one of a (resp. b) from the three slots at u (resp. v).
NniSite resolve_site(const Graph& g, const Trail& w);

/// w_e + max{w_a + w_c, w_b + w_d} - max{w_b + w_c, w_a + w_d}
Rational pivot_update(const Weighting& w, const NniSite& site);

/// Weight half of the move: only the pivot coordinate changes.
Weighting weighted_step(const Weighting& w, const NniSite& site);

std::pair<Graph, Weighting> apply_weighted_nni(const Graph& g, const Weighting& w, const NniSite& site);

/// Replays a move list on (g, w), resolving each site on the current graph.
std::pair<Graph, Weighting> replay_weighted(const Graph& g, const Weighting& w, const std::vector<Trail>& moves);

enum class PieceCase { A, B, C, D };

char case_letter(PieceCase k);

/// Normals of the two comparisons deciding the case:
/// first = chi_a + chi_c - chi_b - chi_d, second = chi_a + chi_d - chi_b - chi_c.
IntVector first_normal(const NniSite& site, std::size_t m);
IntVector second_normal(const NniSite& site, std::size_t m);

/// A: both >= 0, B: first >= 0 and second < 0, C: first < 0 and second >= 0, D: both < 0.
PieceCase case_of(const Weighting& w, const NniSite& site);

/// Pivot row of the linear map valid on a case:
/// A: chi_e + chi_c - chi_d, B: chi_e + chi_a - chi_b, C: chi_e + chi_b - chi_a, D: chi_e + chi_d - chi_c.
IntVector case_row(const NniSite& site, PieceCase k, std::size_t m);

/// w -> U w + offset with U integral and det U = +-1.
struct UnimodularMap {
  IntMatrix matrix;
  IntVector offset;

  static UnimodularMap identity(std::size_t m);
  Integer det() const { return determinant(matrix); }
  RatVector apply(const RatVector& w) const;
  /// (this after other): w -> this(other(w)).
  UnimodularMap after(const UnimodularMap& other) const;

  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

/// Identity with the pivot row replaced by case_row.
UnimodularMap case_matrix(const NniSite& site, PieceCase k, std::size_t m);

struct Hyperplane {
  IntVector normal;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// The two case-boundary hyperplanes, zero normals dropped and normals equal up
/// to sign merged.
std::vector<Hyperplane> site_hyperplanes(const NniSite& site, std::size_t m);

}  // namespace lopoly
