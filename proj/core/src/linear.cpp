#include "lopoly/linear.hpp"

#include <algorithm>

namespace lopoly {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  const std::size_t n = x.size(), k = y.size(), m = y.empty() ? 0 : y[0].size();
  IntMatrix out(n, IntVector(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (sgn(x[i][l]) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += x[i][l] * y[l][j];
    }
  return out;
}

IntVector multiply(const IntMatrix& x, const IntVector& v) {
  IntVector out(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += x[i][j] * v[j];
  return out;
}

RatVector multiply(const IntMatrix& x, const RatVector& v) {
  RatVector out(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(x[i][j]) != 0) out[i] += Rational(x[i][j]) * v[j];
  return out;
}

IntVector row_times(const IntVector& r, const IntMatrix& x) {
  const std::size_t m = x.empty() ? 0 : x[0].size();
  IntVector out(m, 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (sgn(r[i]) == 0) continue;
    for (std::size_t j = 0; j < m; ++j) out[j] += r[i] * x[i][j];
  }
  return out;
}

Rational dot(const IntVector& r, const RatVector& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (sgn(r[i]) != 0) s += Rational(r[i]) * v[i];
  return s;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& z) { return sgn(z) == 0; });
}

Integer determinant(const IntMatrix& x) {
  const std::size_t n = x.size();
  if (n == 0) return 1;
  IntMatrix a = x;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(a[r][k]) == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::optional<RatVector> solve(RatMatrix x, RatVector b) {
  const std::size_t n = x.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(x[piv][col]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(x[piv], x[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(x[r][col]) == 0) continue;
      Rational f = x[r][col] / x[col][col];
      for (std::size_t j = col; j < n; ++j) x[r][j] -= f * x[col][j];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= x[i][i];
  return b;
}

namespace {

/// Dense tableau for: maximize c.y subject to A y = rhs, y >= 0, rhs >= 0.
class Tableau {
 public:
  Tableau(RatMatrix a, RatVector rhs, std::vector<int> basis)
      : a_(std::move(a)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  /// Returns false when unbounded. Columns >= `limit` may not enter.
  bool optimize(const RatVector& c, std::size_t limit) {
    const std::size_t cols = c.size();
    obj_.assign(cols, 0);
    for (std::size_t j = 0; j < cols; ++j) obj_[j] = -c[j];
    value_ = 0;
    for (std::size_t r = 0; r < a_.size(); ++r) {
      const Rational& cb = c[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) obj_[j] += cb * a_[r][j];
      value_ += cb * rhs_[r];
    }
    for (;;) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < limit; ++j)
        if (sgn(obj_[j]) < 0) {
          enter = j;
          break;
        }
      if (enter == cols) return true;
      std::size_t leave = a_.size();
      Rational best;
      for (std::size_t r = 0; r < a_.size(); ++r) {
        if (sgn(a_[r][enter]) <= 0) continue;
        Rational ratio = rhs_[r] / a_[r][enter];
        if (leave == a_.size() || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == a_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = a_[r][c];
    for (auto& x : a_[r]) x /= p;
    rhs_[r] /= p;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || sgn(a_[i][c]) == 0) continue;
      Rational f = a_[i][c];
      for (std::size_t j = 0; j < a_[i].size(); ++j)
        if (sgn(a_[r][j]) != 0) a_[i][j] -= f * a_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    if (!obj_.empty() && sgn(obj_[c]) != 0) {
      Rational f = obj_[c];
      for (std::size_t j = 0; j < obj_.size(); ++j)
        if (sgn(a_[r][j]) != 0) obj_[j] -= f * a_[r][j];
      value_ -= f * rhs_[r];
    }
    basis_[r] = static_cast<int>(c);
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  void truncate_columns(std::size_t cols) {
    for (auto& row : a_) row.resize(cols);
  }

  RatVector solution(std::size_t cols) const {
    RatVector y(cols, 0);
    for (std::size_t r = 0; r < a_.size(); ++r)
      if (static_cast<std::size_t>(basis_[r]) < cols) y[basis_[r]] = rhs_[r];
    return y;
  }

  const Rational& value() const { return value_; }
  RatMatrix& rows() { return a_; }
  std::vector<int>& basis() { return basis_; }

 private:
  RatMatrix a_;
  RatVector rhs_;
  std::vector<int> basis_;
  RatVector obj_;
  Rational value_;
};

}  // namespace

LpResult maximize(const RatVector& objective, const std::vector<LinearConstraint>& rows, bool nonnegative) {
  const std::size_t n = objective.size();
  const std::size_t nx = nonnegative ? n : 2 * n;  // free variables split as y+ - y-
  const std::size_t nrows = rows.size();
  std::size_t nart = 0;
  for (const auto& r : rows) nart += sgn(r.rhs) < 0;
  const std::size_t cols = nx + nrows + nart;

  RatMatrix a(nrows, RatVector(cols, 0));
  RatVector rhs(nrows);
  std::vector<int> basis(nrows);
  std::size_t art = nx + nrows;
  for (std::size_t i = 0; i < nrows; ++i) {
    const auto& row = rows[i];
    int s = sgn(row.rhs) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = s * row.coeffs[j];
      if (!nonnegative) a[i][n + j] = -s * row.coeffs[j];
    }
    a[i][nx + i] = s;
    rhs[i] = s * row.rhs;
    if (s < 0) {
      a[i][art] = 1;
      basis[i] = static_cast<int>(art++);
    } else {
      basis[i] = static_cast<int>(nx + i);
    }
  }

  Tableau tab(std::move(a), std::move(rhs), std::move(basis));
  if (nart > 0) {
    RatVector phase1(cols, 0);
    for (std::size_t j = nx + nrows; j < cols; ++j) phase1[j] = -1;
    tab.optimize(phase1, cols);
    if (sgn(tab.value()) < 0) return LpResult{LpStatus::infeasible, 0, {}};
    // Drive remaining (zero-level) artificials out of the basis.
    for (std::size_t r = 0; r < tab.basis().size();) {
      if (static_cast<std::size_t>(tab.basis()[r]) < nx + nrows) {
        ++r;
        continue;
      }
      std::size_t c = 0;
      while (c < nx + nrows && sgn(tab.rows()[r][c]) == 0) ++c;
      if (c == nx + nrows) {
        tab.drop_row(r);
      } else {
        tab.pivot(r, c);
        ++r;
      }
    }
    tab.truncate_columns(nx + nrows);
  }

  RatVector c(nx + nrows, 0);
  for (std::size_t j = 0; j < n; ++j) {
    c[j] = objective[j];
    if (!nonnegative) c[n + j] = -objective[j];
  }
  if (!tab.optimize(c, nx + nrows)) return LpResult{LpStatus::unbounded, 0, {}};
  RatVector y = tab.solution(nx);
  RatVector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = nonnegative ? y[j] : y[j] - y[n + j];
  return LpResult{LpStatus::optimal, tab.value(), std::move(x)};
}

bool feasible(const std::vector<LinearConstraint>& rows, bool nonnegative) {
  if (rows.empty()) return true;
  const std::size_t n = rows.front().coeffs.size();
  bool any_strict = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.strict; });
  if (!any_strict) {
    return maximize(RatVector(n, 0), rows, nonnegative).status != LpStatus::infeasible;
  }
  // Variables (y, s); s is appended last and bounded by s <= 1. When y is free
  // the slack still needs s >= 0 handled: with nonnegative=false it is split too,
  // so bound it from below explicitly.
  std::vector<LinearConstraint> ext;
  ext.reserve(rows.size() + 2);
  for (const auto& r : rows) {
    LinearConstraint e{r.coeffs, r.rhs, false};
    e.coeffs.push_back(r.strict ? 1 : 0);
    ext.push_back(std::move(e));
  }
  RatVector cap(n + 1, 0);
  cap[n] = 1;
  ext.push_back(LinearConstraint{cap, 1, false});
  if (!nonnegative) {
    RatVector floor_s(n + 1, 0);
    floor_s[n] = -1;
    ext.push_back(LinearConstraint{floor_s, 1, false});
  }
  RatVector objective(n + 1, 0);
  objective[n] = 1;
  LpResult res = maximize(objective, ext, nonnegative);
  return res.status == LpStatus::optimal && sgn(res.value) > 0;
}

}  // namespace lopoly
