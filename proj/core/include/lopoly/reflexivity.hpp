#pragma once

// The translate 4P_G - 1: its inequality system, the lattice characterization
// of reflexivity, the h*-vector of 4P_G, and vertex enumeration.

#include <cstdint>
#include <vector>

#include "lopoly/graph.hpp"
#include "lopoly/polytope.hpp"
#include "lopoly/quasi_polynomial.hpp"

namespace lopoly {

/// Four rows per degree-3 vertex, all with right-hand side 1.
InequalitySystem reflexive_system(const Graph& g);

struct ReflexivityReport {
  bool origin_interior = false;
  /// Per t = 0..T: interior points of (t+1)Q and points of tQ.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counts;
  std::int64_t first_failure = -1;
  bool ok() const { return origin_interior && first_failure < 0; }
};

/// Q given by rows c . w <= beta (alpha = 0). Checks the origin is interior and
/// that the interior lattice points of (t+1)Q are exactly those of tQ.
ReflexivityReport reflexivity_check(const InequalitySystem& q, std::int64_t max_t);
ReflexivityReport reflexivity_check(const Graph& g, std::int64_t max_t);

/// h*-vector of 4P_G from E(t) = L_{P_G}(4t) = sum_k h_k C(t + m - k, m).
/// Throws QpError if some h_k is not a nonnegative integer.
std::vector<Integer> h_star(const QuasiPolynomial& qp, std::size_t m);
std::vector<Integer> h_star(const Graph& g);

bool is_palindromic(const std::vector<Integer>& h);

/// Basic feasible solutions of the rows at dilation t, sorted and deduplicated.
/// Guarded to dim <= 7.
std::vector<RatVector> vertex_enumeration(const InequalitySystem& sys, const Rational& t);

}  // namespace lopoly
