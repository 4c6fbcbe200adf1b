#pragma once

// Lattice-point counting in dilated polytopes: bounded backtracking over the
// coordinates and, for trees, message passing along the edges.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lopoly/graph.hpp"
#include "lopoly/polytope.hpp"
#include "lopoly/rational.hpp"

namespace lopoly {

enum class CountMethod { backtracking, tree_dp };

std::string method_name(CountMethod m);

struct CountReport {
  Rational t;
  Integer count;
  CountMethod method = CountMethod::backtracking;
};

struct CountOptions {
  unsigned threads = 1;
  /// Count points satisfying every row strictly.
  bool strict = false;
};

/// Integer bounds per coordinate of the points satisfying the rows at t
/// (rational relaxation, then rounded inward). Throws when unbounded.
/// Returns an empty vector when the relaxation is infeasible.
std::vector<std::pair<std::int64_t, std::int64_t>> bounding_box(const InequalitySystem& sys, const Rational& t,
                                                               bool strict = false);

CountReport count_backtracking(const InequalitySystem& sys, const Rational& t, const CountOptions& opts = {});

/// Calls visit on every lattice point (in lexicographic order).
void enumerate_points(const InequalitySystem& sys, const Rational& t, bool strict,
                      const std::function<void(const std::vector<std::int64_t>&)>& visit);

/// Requires g to be a {1,3}-tree with edge ids 1..m.
CountReport count_tree_dp(const Graph& g, std::int64_t t);

/// Tree DP for trees at integer t, backtracking otherwise.
CountReport count_points(const Graph& g, const Rational& t, const CountOptions& opts = {});

}  // namespace lopoly
