#include "lopoly/verlinde.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace lopoly {

long default_precision_bits() {
  if (const char* env = std::getenv("LOPOLY_PRECISION")) {
    char* end = nullptr;
    long bits = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && bits >= MPFR_PREC_MIN && bits <= 1 << 20) return bits;
  }
  return 128;
}

namespace {

struct Real {
  mpfr_t v;
  explicit Real(long prec) { mpfr_init2(v, prec); }
  ~Real() { mpfr_clear(v); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
};

/// Encloses the sum in [lo, hi]; returns false if the rounding could not be certified.
bool verlinde_at(int n, int t, long prec, Integer& out) {
  const unsigned long q = static_cast<unsigned long>(t) + 2;
  Real pi_lo(prec), pi_hi(prec), half_lo(prec), half_hi(prec);
  mpfr_const_pi(pi_lo.v, MPFR_RNDD);
  mpfr_const_pi(pi_hi.v, MPFR_RNDU);
  mpfr_div_2ui(half_lo.v, pi_lo.v, 1, MPFR_RNDD);
  mpfr_div_2ui(half_hi.v, pi_hi.v, 1, MPFR_RNDU);

  Real sum_lo(prec), sum_hi(prec);
  mpfr_set_ui(sum_lo.v, 0, MPFR_RNDN);
  mpfr_set_ui(sum_hi.v, 0, MPFR_RNDN);
  Real x_lo(prec), x_hi(prec), s1(prec), s2(prec), sin_lo(prec), sin_hi(prec), term(prec);

  for (unsigned long j = 1; j <= q - 1; ++j) {
    mpfr_mul_ui(x_lo.v, pi_lo.v, j, MPFR_RNDD);
    mpfr_div_ui(x_lo.v, x_lo.v, q, MPFR_RNDD);
    mpfr_mul_ui(x_hi.v, pi_hi.v, j, MPFR_RNDU);
    mpfr_div_ui(x_hi.v, x_hi.v, q, MPFR_RNDU);

    // sin is concave on [0, pi]: its minimum over the interval is at an endpoint.
    mpfr_sin(s1.v, x_lo.v, MPFR_RNDD);
    mpfr_sin(s2.v, x_hi.v, MPFR_RNDD);
    mpfr_min(sin_lo.v, s1.v, s2.v, MPFR_RNDD);
    if (mpfr_lessequal_p(x_lo.v, half_hi.v) && mpfr_greaterequal_p(x_hi.v, half_lo.v)) {
      mpfr_set_ui(sin_hi.v, 1, MPFR_RNDU);
    } else {
      mpfr_sin(s1.v, x_lo.v, MPFR_RNDU);
      mpfr_sin(s2.v, x_hi.v, MPFR_RNDU);
      mpfr_max(sin_hi.v, s1.v, s2.v, MPFR_RNDU);
    }
    if (mpfr_sgn(sin_lo.v) <= 0) return false;

    mpfr_pow_ui(term.v, sin_hi.v, static_cast<unsigned long>(n), MPFR_RNDU);
    mpfr_ui_div(term.v, 1, term.v, MPFR_RNDD);
    mpfr_add(sum_lo.v, sum_lo.v, term.v, MPFR_RNDD);
    mpfr_pow_ui(term.v, sin_lo.v, static_cast<unsigned long>(n), MPFR_RNDD);
    mpfr_ui_div(term.v, 1, term.v, MPFR_RNDU);
    mpfr_add(sum_hi.v, sum_hi.v, term.v, MPFR_RNDU);
  }

  Integer num;
  mpz_ui_pow_ui(num.get_mpz_t(), q, static_cast<unsigned long>(n / 2));
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
  Rational scale(num, den);
  scale.canonicalize();
  mpfr_mul_q(sum_lo.v, sum_lo.v, scale.get_mpq_t(), MPFR_RNDD);
  mpfr_mul_q(sum_hi.v, sum_hi.v, scale.get_mpq_t(), MPFR_RNDU);

  Real width(prec);
  mpfr_sub(width.v, sum_hi.v, sum_lo.v, MPFR_RNDU);
  if (mpfr_cmp_d(width.v, 0.25) >= 0) return false;
  Integer lo_int, hi_int;
  mpfr_get_z(lo_int.get_mpz_t(), sum_lo.v, MPFR_RNDU);
  mpfr_get_z(hi_int.get_mpz_t(), sum_hi.v, MPFR_RNDD);
  if (lo_int != hi_int) return false;
  out = lo_int;
  return true;
}

}  // namespace

Integer verlinde_count(int n, int t, long precision_bits, long max_bits) {
  if (n <= 0 || n % 2 != 0) throw std::invalid_argument("verlinde_count: n must be a positive even integer");
  if (t <= 0 || t % 2 == 0) throw std::invalid_argument("verlinde_count: t must be a positive odd integer");
  long prec = precision_bits > 0 ? precision_bits : default_precision_bits();
  prec = std::max<long>(prec, MPFR_PREC_MIN);
  for (; prec <= max_bits; prec *= 2) {
    Integer out;
    if (verlinde_at(n, t, prec, out)) return out;
  }
  throw PrecisionError("verlinde_count: precision budget of " + std::to_string(max_bits) + " bits exceeded");
}

Rational bernoulli(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli: negative index");
  std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
  b[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rational s = 0;
    Integer binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      s += Rational(binom) * b[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[static_cast<std::size_t>(m)] = -s / (m + 1);
  }
  return b[static_cast<std::size_t>(k)];
}

namespace {

Polynomial series_mul(const Polynomial& x, const Polynomial& y, std::size_t degree) {
  Polynomial out(degree + 1, 0);
  for (std::size_t i = 0; i < x.size() && i <= degree; ++i)
    for (std::size_t j = 0; j < y.size() && i + j <= degree; ++j) out[i + j] += x[i] * y[j];
  return out;
}

Integer factorial(int k) {
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

Polynomial x_over_sin_power(int n, std::size_t degree) {
  // sin x / x = sum_j (-1)^j x^{2j} / (2j+1)!
  Polynomial s(degree + 1, 0);
  for (std::size_t j = 0; 2 * j <= degree; ++j) {
    Rational c(Integer(1), factorial(static_cast<int>(2 * j + 1)));
    s[2 * j] = j % 2 == 0 ? c : Rational(-c);
  }
  // Reciprocal series.
  Polynomial r(degree + 1, 0);
  r[0] = 1;
  for (std::size_t k = 1; k <= degree; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += s[i] * r[k - i];
    r[k] = -acc;
  }
  Polynomial out{1};
  for (int i = 0; i < n; ++i) out = series_mul(out, r, degree);
  out.resize(degree + 1, 0);
  return out;
}

Polynomial zagier_polynomial(int n) {
  if (n <= 0 || n % 2 != 0) throw std::invalid_argument("zagier_polynomial: n must be a positive even integer");
  Polynomial series = x_over_sin_power(n, static_cast<std::size_t>(n));
  // Polynomial in s = t + 2 first.
  Polynomial in_s(static_cast<std::size_t>(n / 2 + n) + 1, 0);
  for (int k = 0; k <= n / 2; ++k) {
    Rational coef = Rational(Integer(1) << (2 * k)) * bernoulli(2 * k) / Rational(factorial(2 * k));
    if (k % 2 == 0) coef = -coef;  // (-1)^{k-1}
    in_s[static_cast<std::size_t>(n / 2 + 2 * k)] += coef * series[static_cast<std::size_t>(n - 2 * k)];
  }
  Rational scale(Integer(1), Integer(1) << (n + 1));
  for (auto& c : in_s) c *= scale;
  return trimmed(compose_affine(in_s, 1, 2));
}

Rational cubic_volume(int n) {
  Rational b = bernoulli(n);
  if (b < 0) b = -b;
  return b / Rational(2 * factorial(n));
}

bool VolumeReport::ok() const {
  return !leading.empty() &&
         std::all_of(leading.begin(), leading.end(), [&](const Rational& x) { return x == expected; });
}

VolumeReport volume_checks(const Graph& g, const QuasiPolynomial& qp) {
  if (!is_connected(g)) throw GraphError("volume_checks: graph must be connected");
  for (VertexId v : g.vertices())
    if (g.degree(v) != 3) throw GraphError("volume_checks: graph must be cubic");
  VolumeReport rep;
  rep.expected = cubic_volume(static_cast<int>(g.vertex_count()));
  for (const auto& c : qp.constituents)
    rep.leading.push_back(g.edge_count() < c.size() ? c[g.edge_count()] : Rational(0));
  return rep;
}

}  // namespace lopoly
