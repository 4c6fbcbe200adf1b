#include "lopoly/reflexivity.hpp"

#include <algorithm>
#include <set>

#include "lopoly/counting.hpp"

namespace lopoly {

InequalitySystem reflexive_system(const Graph& g) {
  InequalitySystem sys = inequality_system(g);
  for (auto& r : sys.rows) {
    r.alpha = 0;
    r.beta = 1;
  }
  return sys;
}

ReflexivityReport reflexivity_check(const InequalitySystem& q, std::int64_t max_t) {
  ReflexivityReport rep;
  rep.origin_interior = contains_strictly(q, RatVector(q.dim, 0), 0);
  InequalitySystem dil = as_dilation(q);
  for (std::int64_t t = 0; t <= max_t; ++t) {
    std::set<std::vector<std::int64_t>> inner, outer;
    enumerate_points(dil, Rational(static_cast<long>(t + 1)), true,
                     [&](const std::vector<std::int64_t>& p) { inner.insert(p); });
    enumerate_points(dil, Rational(static_cast<long>(t)), false,
                     [&](const std::vector<std::int64_t>& p) { outer.insert(p); });
    rep.counts.emplace_back(inner.size(), outer.size());
    if (inner != outer && rep.first_failure < 0) rep.first_failure = t;
  }
  return rep;
}

ReflexivityReport reflexivity_check(const Graph& g, std::int64_t max_t) {
  return reflexivity_check(reflexive_system(g), max_t);
}

namespace {

Integer binomial(const Integer& n, unsigned long k) {
  if (n < 0) return 0;
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

}  // namespace

std::vector<Integer> h_star(const QuasiPolynomial& qp, std::size_t m) {
  // E(t) = L(4t) uses the constituent of residue 0.
  Polynomial e = compose_affine(qp.constituent(0), 4, 0);
  std::vector<Integer> h;
  for (std::size_t j = 0; j <= m; ++j) {
    Rational rest = evaluate(e, Rational(static_cast<long>(j)));
    for (std::size_t k = 0; k < j; ++k)
      rest -= Rational(h[k] * binomial(Integer(static_cast<long>(j + m - k)), m));
    if (rest.get_den() != 1 || rest < 0) throw QpError("h* coefficient " + std::to_string(j) + " is " + to_string(rest));
    h.push_back(rest.get_num());
  }
  // The binomial expansion must reproduce E beyond the solved range.
  for (std::size_t j = m + 1; j <= 2 * m + 1; ++j) {
    Rational s = 0;
    for (std::size_t k = 0; k <= m; ++k) s += Rational(h[k] * binomial(Integer(static_cast<long>(j + m - k)), m));
    if (s != evaluate(e, Rational(static_cast<long>(j)))) throw QpError("h* expansion does not reproduce L(4t)");
  }
  return h;
}

std::vector<Integer> h_star(const Graph& g) { return h_star(quasi_polynomial(g), g.edge_count()); }

bool is_palindromic(const std::vector<Integer>& h) { return std::equal(h.begin(), h.end(), h.rbegin()); }

std::vector<RatVector> vertex_enumeration(const InequalitySystem& sys_in, const Rational& t) {
  if (sys_in.dim > 7) throw std::domain_error("vertex_enumeration: dimension above 7");
  InequalitySystem sys = deduplicated(sys_in);
  const std::size_t m = sys.dim, r = sys.rows.size();
  std::set<RatVector> found;
  if (r < m) return {};
  std::vector<bool> pick(r, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(m), true);
  do {
    RatMatrix a;
    RatVector b;
    for (std::size_t i = 0; i < r; ++i) {
      if (!pick[i]) continue;
      RatVector row(m);
      for (std::size_t j = 0; j < m; ++j) row[j] = Rational(static_cast<long>(sys.rows[i].coeffs[j]));
      a.push_back(std::move(row));
      b.push_back(row_rhs(sys.rows[i], t));
    }
    auto x = solve(std::move(a), std::move(b));
    if (x && contains(sys, *x, t)) found.insert(*x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {found.begin(), found.end()};
}

}  // namespace lopoly
