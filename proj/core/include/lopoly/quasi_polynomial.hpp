#pragma once

// Ehrhart quasi-polynomials by exact interpolation over residue classes, plus
// the semi-reflexivity check on rational dilations.

#include <functional>
#include <stdexcept>
#include <vector>

#include "lopoly/counting.hpp"
#include "lopoly/graph.hpp"
#include "lopoly/rational.hpp"

namespace lopoly {

/// Coefficients in ascending powers of t.
using Polynomial = std::vector<Rational>;

Rational evaluate(const Polynomial& p, const Rational& t);
/// Drops trailing zero coefficients.
Polynomial trimmed(Polynomial p);
/// Polynomial through the points (xs[i], ys[i]) of degree < xs.size().
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);
/// p(a * t + b) as a polynomial in t.
Polynomial compose_affine(const Polynomial& p, const Rational& a, const Rational& b);

class QpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuasiPolynomial {
  int period = 1;
  std::vector<Polynomial> constituents;  // index = t mod period

  const Polynomial& constituent(const Integer& t) const;
  Rational evaluate(const Integer& t) const;
  /// Coefficient of t^degree in every constituent; throws QpError if they differ.
  Rational leading_coefficient(std::size_t degree) const;

  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;
};

/// Smallest period in {1, 2, 4, ...} dividing the current one whose
/// constituents coincide.
QuasiPolynomial minimize_period(const QuasiPolynomial& qp);

using Counter = std::function<Integer(std::int64_t t)>;

/// Interpolates each residue class mod `period` at t = r, r + period, ...,
/// r + degree * period and checks one extra point per class.
QuasiPolynomial interpolate_quasi_polynomial(const Counter& count, std::size_t degree, int period = 4);

/// Ehrhart quasi-polynomial of P_G (degree m, period 4 before minimization).
QuasiPolynomial quasi_polynomial(const Graph& g, const CountOptions& opts = {});

struct SemiReflexiveEntry {
  Rational s;
  Integer count_at_s;
  Integer count_at_floor;
  bool ok() const { return count_at_s == count_at_floor; }
};

struct SemiReflexiveReport {
  std::vector<SemiReflexiveEntry> entries;
  bool ok() const;
};

SemiReflexiveReport semi_reflexive_check(const Graph& g, const std::vector<Rational>& samples,
                                         const CountOptions& opts = {});

}  // namespace lopoly
