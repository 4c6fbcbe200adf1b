#pragma once

// Closed forms for cubic graphs: the trigonometric Verlinde sum (evaluated with
// certified interval arithmetic), its Bernoulli-number polynomial form, and the
// volume |B_n| / (2 n!).

#include <stdexcept>
#include <vector>

#include "lopoly/graph.hpp"
#include "lopoly/quasi_polynomial.hpp"
#include "lopoly/rational.hpp"

namespace lopoly {

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Working precision in bits for verlinde_count: LOPOLY_PRECISION if set, else 128.
long default_precision_bits();

/// (t+2)^{n/2} / 2^{n+1} * sum_{j=1}^{t+1} sin^{-n}(pi j / (t+2)) for even n and
/// odd t. The sum is enclosed in an interval that must contain exactly one
/// integer and be narrower than 1/4; precision doubles up to `max_bits`.
Integer verlinde_count(int n, int t, long precision_bits = 0, long max_bits = 1 << 16);

/// B_k with B_1 = -1/2.
Rational bernoulli(int k);

/// Coefficients of (x / sin x)^n up to x^degree.
Polynomial x_over_sin_power(int n, std::size_t degree);

/// ((t+2)^{n/2} / 2^{n+1}) * sum_k (-1)^{k-1} 2^{2k} B_{2k} / (2k)! * c_k * (t+2)^{2k},
/// c_k the coefficient of x^{n-2k} in (x / sin x)^n.
Polynomial zagier_polynomial(int n);

/// |B_n| / (2 n!)
Rational cubic_volume(int n);

struct VolumeReport {
  Rational expected;
  std::vector<Rational> leading;  // per constituent
  bool ok() const;
};

/// Compares the leading coefficient of every constituent with cubic_volume(n).
VolumeReport volume_checks(const Graph& g, const QuasiPolynomial& qp);

}  // namespace lopoly
