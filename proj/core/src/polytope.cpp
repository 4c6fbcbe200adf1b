#include "lopoly/polytope.hpp"

#include <algorithm>

namespace lopoly {

InequalitySystem inequality_system(const Graph& g) {
  require_13(g);
  if (!g.has_contiguous_edge_ids()) throw GraphError("edge ids must be exactly 1..m");
  InequalitySystem sys;
  sys.dim = g.edge_count();
  for (VertexId x : g.vertices()) {
    std::vector<EdgeId> s = g.slots(x);
    if (s.size() != 3) continue;
    auto row = [&](int sa, int sb, int sc, std::int64_t alpha) {
      InequalityRow r{std::vector<std::int64_t>(sys.dim, 0), alpha, 0};
      r.coeffs[static_cast<std::size_t>(s[0] - 1)] += sa;
      r.coeffs[static_cast<std::size_t>(s[1] - 1)] += sb;
      r.coeffs[static_cast<std::size_t>(s[2] - 1)] += sc;
      sys.rows.push_back(std::move(r));
    };
    row(1, 1, 1, 1);
    row(1, -1, -1, 0);
    row(-1, 1, -1, 0);
    row(-1, -1, 1, 0);
  }
  return sys;
}

InequalitySystem deduplicated(const InequalitySystem& sys) {
  InequalitySystem out = sys;
  std::sort(out.rows.begin(), out.rows.end());
  out.rows.erase(std::unique(out.rows.begin(), out.rows.end()), out.rows.end());
  return out;
}

InequalitySystem as_dilation(const InequalitySystem& sys) {
  InequalitySystem out = sys;
  for (auto& r : out.rows) {
    if (r.alpha != 0) throw std::invalid_argument("as_dilation: row already scales with t");
    r.alpha = r.beta;
    r.beta = 0;
  }
  return out;
}

Rational row_rhs(const InequalityRow& row, const Rational& t) {
  return Rational(static_cast<long>(row.alpha)) * t + Rational(static_cast<long>(row.beta));
}

namespace {

Rational lhs(const InequalityRow& row, const RatVector& w) {
  Rational s = 0;
  for (std::size_t i = 0; i < row.coeffs.size(); ++i)
    if (row.coeffs[i] != 0) s += Rational(static_cast<long>(row.coeffs[i])) * w[i];
  return s;
}

void check_dim(const InequalitySystem& sys, const RatVector& w) {
  if (w.size() != sys.dim) throw std::invalid_argument("point dimension does not match the system");
}

}  // namespace

bool contains(const InequalitySystem& sys, const RatVector& w, const Rational& t) {
  check_dim(sys, w);
  return std::all_of(sys.rows.begin(), sys.rows.end(), [&](const auto& r) { return lhs(r, w) <= row_rhs(r, t); });
}

bool contains_strictly(const InequalitySystem& sys, const RatVector& w, const Rational& t) {
  check_dim(sys, w);
  return std::all_of(sys.rows.begin(), sys.rows.end(), [&](const auto& r) { return lhs(r, w) < row_rhs(r, t); });
}

std::vector<LinearConstraint> constraints_at(const InequalitySystem& sys, const Rational& t) {
  std::vector<LinearConstraint> out;
  out.reserve(sys.rows.size());
  for (const auto& r : sys.rows) {
    RatVector c(sys.dim);
    for (std::size_t i = 0; i < sys.dim; ++i) c[i] = Rational(static_cast<long>(r.coeffs[i]));
    out.push_back(LinearConstraint{std::move(c), row_rhs(r, t), false});
  }
  return out;
}

}  // namespace lopoly
