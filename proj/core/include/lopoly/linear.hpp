#pragma once

// Exact linear algebra over Z and Q: integer matrices, fraction-free
// determinants, Gaussian solves and a two-phase rational simplex.

#include <optional>
#include <stdexcept>
#include <vector>

#include "lopoly/rational.hpp"

namespace lopoly {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;  // row-major
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);
IntVector multiply(const IntMatrix& x, const IntVector& v);
RatVector multiply(const IntMatrix& x, const RatVector& v);
/// Row vector times matrix: r * x.
IntVector row_times(const IntVector& r, const IntMatrix& x);
Rational dot(const IntVector& r, const RatVector& v);
bool is_zero(const IntVector& v);

/// Bareiss elimination; exact for any square integer matrix.
Integer determinant(const IntMatrix& x);

/// Unique solution of x * y = b, or nullopt when x is singular.
std::optional<RatVector> solve(RatMatrix x, RatVector b);

/// coeffs . y <= rhs, or < rhs when strict.
struct LinearConstraint {
  RatVector coeffs;
  Rational rhs;
  bool strict = false;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  RatVector point;
};

/// Maximizes objective . y over the weak constraints (strict flags are ignored).
/// Variables are free unless `nonnegative` is set.
LpResult maximize(const RatVector& objective, const std::vector<LinearConstraint>& rows, bool nonnegative = false);

/// Feasibility with strict rows honored: maximizes a common slack s <= 1 added to
/// every strict row and reports whether some s > 0 (or no strict rows) fits.
bool feasible(const std::vector<LinearConstraint>& rows, bool nonnegative = false);

}  // namespace lopoly
