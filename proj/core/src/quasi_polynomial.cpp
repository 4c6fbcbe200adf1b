#include "lopoly/quasi_polynomial.hpp"

#include <algorithm>

namespace lopoly {

Rational evaluate(const Polynomial& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial trimmed(Polynomial p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  // Newton divided differences, then expand the Newton form.
  std::vector<Rational> coef = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  Polynomial p(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    // p = p * (t - xs[k]) + coef[k]
    Polynomial next(n, 0);
    for (std::size_t j = 0; j + 1 < n; ++j) next[j + 1] += p[j];
    for (std::size_t j = 0; j < n; ++j) next[j] -= xs[k] * p[j];
    next[0] += coef[k];
    p = std::move(next);
  }
  return p;
}

Polynomial compose_affine(const Polynomial& p, const Rational& a, const Rational& b) {
  Polynomial out(p.size(), 0);
  Polynomial power{1};  // (a t + b)^k
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (std::size_t j = 0; j < power.size(); ++j) out[j] += p[k] * power[j];
    Polynomial next(power.size() + 1, 0);
    for (std::size_t j = 0; j < power.size(); ++j) {
      next[j + 1] += a * power[j];
      next[j] += b * power[j];
    }
    power = std::move(next);
  }
  return out;
}

const Polynomial& QuasiPolynomial::constituent(const Integer& t) const {
  Integer r = t % period;
  if (r < 0) r += period;
  return constituents.at(static_cast<std::size_t>(r.get_si()));
}

Rational QuasiPolynomial::evaluate(const Integer& t) const { return lopoly::evaluate(constituent(t), Rational(t)); }

Rational QuasiPolynomial::leading_coefficient(std::size_t degree) const {
  auto coeff = [&](const Polynomial& p) { return degree < p.size() ? p[degree] : Rational(0); };
  Rational lead = coeff(constituents.at(0));
  for (const auto& c : constituents)
    if (coeff(c) != lead) throw QpError("constituents have different leading coefficients");
  return lead;
}

QuasiPolynomial minimize_period(const QuasiPolynomial& qp) {
  QuasiPolynomial best = qp;
  for (int p = 1; p < qp.period; ++p) {
    if (qp.period % p != 0) continue;
    bool same = true;
    for (int r = 0; r < qp.period && same; ++r)
      same = trimmed(qp.constituents[static_cast<std::size_t>(r)]) ==
             trimmed(qp.constituents[static_cast<std::size_t>(r % p)]);
    if (same) {
      best.period = p;
      best.constituents.assign(qp.constituents.begin(), qp.constituents.begin() + p);
      break;
    }
  }
  return best;
}

QuasiPolynomial interpolate_quasi_polynomial(const Counter& count, std::size_t degree, int period) {
  QuasiPolynomial qp;
  qp.period = period;
  for (int r = 0; r < period; ++r) {
    std::vector<Rational> xs, ys;
    for (std::size_t k = 0; k <= degree; ++k) {
      std::int64_t t = r + static_cast<std::int64_t>(k) * period;
      xs.emplace_back(static_cast<long>(t));
      ys.emplace_back(count(t));
    }
    Polynomial p = interpolate(xs, ys);
    std::int64_t extra = r + static_cast<std::int64_t>(degree + 1) * period;
    Integer expected = count(extra);
    if (evaluate(p, Rational(static_cast<long>(extra))) != Rational(expected))
      throw QpError("interpolated constituent " + std::to_string(r) + " disagrees with the count at t=" +
                    std::to_string(extra));
    qp.constituents.push_back(trimmed(std::move(p)));
  }
  return minimize_period(qp);
}

QuasiPolynomial quasi_polynomial(const Graph& g, const CountOptions& opts) {
  require_13(g);
  if (is_tree(g))
    return interpolate_quasi_polynomial([&](std::int64_t t) { return count_tree_dp(g, t).count; }, g.edge_count());
  InequalitySystem sys = deduplicated(inequality_system(g));
  return interpolate_quasi_polynomial(
      [&](std::int64_t t) { return count_backtracking(sys, Rational(static_cast<long>(t)), opts).count; },
      g.edge_count());
}

bool SemiReflexiveReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok(); });
}

SemiReflexiveReport semi_reflexive_check(const Graph& g, const std::vector<Rational>& samples,
                                         const CountOptions& opts) {
  InequalitySystem sys = inequality_system(g);
  SemiReflexiveReport rep;
  for (const Rational& s : samples) {
    if (sgn(s) < 0) throw std::invalid_argument("dilations must be nonnegative");
    Integer at_s = count_backtracking(sys, s, opts).count;
    Integer at_floor = count_backtracking(sys, Rational(floor(s)), opts).count;
    rep.entries.push_back(SemiReflexiveEntry{s, at_s, at_floor});
  }
  return rep;
}

}  // namespace lopoly
