#pragma once

// Integer inequality systems c . w <= alpha * t + beta and exact membership.

#include <cstdint>
#include <vector>

#include "lopoly/graph.hpp"
#include "lopoly/linear.hpp"
#include "lopoly/rational.hpp"

namespace lopoly {

struct InequalityRow {
  std::vector<std::int64_t> coeffs;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  friend bool operator==(const InequalityRow&, const InequalityRow&) = default;
  friend auto operator<=>(const InequalityRow&, const InequalityRow&) = default;
};

struct InequalitySystem {
  std::size_t dim = 0;
  std::vector<InequalityRow> rows;

  friend bool operator==(const InequalitySystem&, const InequalitySystem&) = default;
};

/// Perimeter and three metric rows per degree-3 vertex, slots taken with
/// multiplicity so a loop contributes twice. Requires a valid {1,3}-graph with
/// edge ids 1..m.
InequalitySystem inequality_system(const Graph& g);

/// Sorted, duplicate rows removed.
InequalitySystem deduplicated(const InequalitySystem& sys);

/// Rows with alpha = 0 rewritten so beta scales with the dilation (alpha := beta).
InequalitySystem as_dilation(const InequalitySystem& sys);

Rational row_rhs(const InequalityRow& row, const Rational& t);
bool contains(const InequalitySystem& sys, const RatVector& w, const Rational& t);
/// Every row strict.
bool contains_strictly(const InequalitySystem& sys, const RatVector& w, const Rational& t);

/// The rows at dilation t as LP constraints.
std::vector<LinearConstraint> constraints_at(const InequalitySystem& sys, const Rational& t);

}  // namespace lopoly
