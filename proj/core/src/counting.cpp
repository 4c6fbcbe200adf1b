#include "lopoly/counting.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

namespace lopoly {

std::string method_name(CountMethod m) { return m == CountMethod::tree_dp ? "tree-dp" : "backtracking"; }

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Integer right-hand sides at dilation t: floor for weak rows, ceil - 1 for strict.
std::vector<std::int64_t> integer_rhs(const InequalitySystem& sys, const Rational& t, bool strict) {
  std::vector<std::int64_t> out;
  out.reserve(sys.rows.size());
  for (const auto& r : sys.rows) {
    Rational q = row_rhs(r, t);
    out.push_back(to_int64(strict ? Integer(ceil(q) - 1) : floor(q)));
  }
  return out;
}

using Box = std::vector<std::pair<std::int64_t, std::int64_t>>;

Box box_for(const InequalitySystem& sys, const std::vector<std::int64_t>& rhs) {
  std::vector<LinearConstraint> rows;
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    RatVector c(sys.dim);
    for (std::size_t j = 0; j < sys.dim; ++j) c[j] = Rational(static_cast<long>(sys.rows[i].coeffs[j]));
    rows.push_back(LinearConstraint{std::move(c), Rational(static_cast<long>(rhs[i])), false});
  }
  Box box(sys.dim);
  for (std::size_t j = 0; j < sys.dim; ++j) {
    RatVector obj(sys.dim, 0);
    obj[j] = 1;
    LpResult hi = maximize(obj, rows);
    if (hi.status == LpStatus::infeasible) return {};
    if (hi.status == LpStatus::unbounded) throw std::domain_error("polytope is unbounded");
    obj[j] = -1;
    LpResult lo = maximize(obj, rows);
    if (lo.status == LpStatus::unbounded) throw std::domain_error("polytope is unbounded");
    box[j] = {to_int64(ceil(-lo.value)), to_int64(floor(hi.value))};
    if (box[j].first > box[j].second) return {};
  }
  return box;
}

class Search {
 public:
  Search(const InequalitySystem& sys, std::vector<std::int64_t> rhs, Box box)
      : m_(sys.dim), rhs_(std::move(rhs)), box_(std::move(box)), rows_of_(m_), partial_(sys.rows.size(), 0) {
    for (const auto& r : sys.rows) a_.push_back(r.coeffs);
    for (std::size_t k = 0; k < m_; ++k)
      for (std::size_t r = 0; r < a_.size(); ++r)
        if (a_[r][k] != 0) rows_of_[k].push_back(r);
    suffix_min_.assign(m_ + 1, std::vector<std::int64_t>(a_.size(), 0));
    for (std::size_t k = m_; k-- > 0;)
      for (std::size_t r = 0; r < a_.size(); ++r) {
        std::int64_t c = a_[r][k];
        suffix_min_[k][r] = suffix_min_[k + 1][r] + std::min(c * box_[k].first, c * box_[k].second);
      }
  }

  bool trivially_empty() const {
    for (std::size_t r = 0; r < a_.size(); ++r)
      if (suffix_min_[0][r] > rhs_[r]) return true;
    return false;
  }

  std::pair<std::int64_t, std::int64_t> range(std::size_t k) const {
    std::int64_t lo = box_[k].first, hi = box_[k].second;
    for (std::size_t r : rows_of_[k]) {
      std::int64_t slack = rhs_[r] - partial_[r] - suffix_min_[k + 1][r];
      std::int64_t c = a_[r][k];
      if (c > 0)
        hi = std::min(hi, floor_div(slack, c));
      else
        lo = std::max(lo, ceil_div(slack, c));
    }
    return {lo, hi};
  }

  void assign(std::size_t k, std::int64_t x, int sign) {
    for (std::size_t r : rows_of_[k]) partial_[r] += sign * a_[r][k] * x;
  }

  std::uint64_t count_from(std::size_t k) {
    auto [lo, hi] = range(k);
    if (lo > hi) return 0;
    if (k + 1 == m_) return static_cast<std::uint64_t>(hi - lo + 1);
    std::uint64_t total = 0;
    for (std::int64_t x = lo; x <= hi; ++x) {
      assign(k, x, 1);
      total += count_from(k + 1);
      assign(k, x, -1);
    }
    return total;
  }

  /// Count with the first coordinate restricted to values congruent to `lane` mod `lanes`.
  std::uint64_t count_lane(unsigned lane, unsigned lanes) {
    if (m_ == 0) return lane == 0 ? 1 : 0;
    auto [lo, hi] = range(0);
    std::uint64_t total = 0;
    for (std::int64_t x = lo + lane; x <= hi; x += lanes) {
      if (m_ == 1) {
        ++total;
        continue;
      }
      assign(0, x, 1);
      total += count_from(1);
      assign(0, x, -1);
    }
    return total;
  }

  void visit_from(std::size_t k, std::vector<std::int64_t>& point,
                  const std::function<void(const std::vector<std::int64_t>&)>& visit) {
    if (k == m_) {
      visit(point);
      return;
    }
    auto [lo, hi] = range(k);
    for (std::int64_t x = lo; x <= hi; ++x) {
      point[k] = x;
      assign(k, x, 1);
      visit_from(k + 1, point, visit);
      assign(k, x, -1);
    }
  }

 private:
  std::size_t m_;
  std::vector<std::vector<std::int64_t>> a_;
  std::vector<std::int64_t> rhs_;
  Box box_;
  std::vector<std::vector<std::size_t>> rows_of_;
  std::vector<std::vector<std::int64_t>> suffix_min_;
  std::vector<std::int64_t> partial_;
};

}  // namespace

Box bounding_box(const InequalitySystem& sys, const Rational& t, bool strict) {
  return box_for(sys, integer_rhs(sys, t, strict));
}

CountReport count_backtracking(const InequalitySystem& sys, const Rational& t, const CountOptions& opts) {
  if (sgn(t) < 0) throw std::invalid_argument("dilation must be nonnegative");
  CountReport rep{t, 0, CountMethod::backtracking};
  std::vector<std::int64_t> rhs = integer_rhs(sys, t, opts.strict);
  Box box = box_for(sys, rhs);
  if (box.empty() && sys.dim > 0) return rep;
  Search probe(sys, rhs, box);
  if (probe.trivially_empty()) return rep;

  unsigned lanes = std::max(1u, opts.threads);
  if (lanes == 1 || sys.dim < 2) {
    rep.count = Integer(std::to_string(probe.count_lane(0, 1)));
    return rep;
  }
  std::vector<std::uint64_t> partial(lanes, 0);
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < lanes; ++i)
    pool.emplace_back([&, i] {
      Search s(sys, rhs, box);
      partial[i] = s.count_lane(i, lanes);
    });
  for (auto& th : pool) th.join();
  Integer total = 0;
  for (auto p : partial) total += Integer(std::to_string(p));
  rep.count = total;
  return rep;
}

void enumerate_points(const InequalitySystem& sys, const Rational& t, bool strict,
                      const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> rhs = integer_rhs(sys, t, strict);
  Box box = box_for(sys, rhs);
  if (box.empty() && sys.dim > 0) return;
  Search s(sys, rhs, box);
  if (s.trivially_empty()) return;
  std::vector<std::int64_t> point(sys.dim, 0);
  s.visit_from(0, point, visit);
}

namespace {

using Table = std::vector<Integer>;

Table prefix(const Table& f) {
  Table p(f.size() + 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) p[i + 1] = p[i] + f[i];
  return p;
}

/// Sum of f[lo..hi] clamped to the table.
Integer range_sum(const Table& pre, std::int64_t lo, std::int64_t hi) {
  lo = std::max<std::int64_t>(lo, 0);
  hi = std::min<std::int64_t>(hi, static_cast<std::int64_t>(pre.size()) - 2);
  if (lo > hi) return 0;
  return pre[static_cast<std::size_t>(hi + 1)] - pre[static_cast<std::size_t>(lo)];
}

class TreeCounter {
 public:
  TreeCounter(const Graph& g, std::int64_t t) : g_(g), t_(t) {}

  /// Assignments of the subtree hanging below x through `up`, per value of w_up.
  Table message(EdgeId up, VertexId x) const {
    if (g_.degree(x) == 1) return Table(static_cast<std::size_t>(t_ + 1), 1);
    std::vector<EdgeId> down;
    for (EdgeId f : g_.incident_edges(x))
      if (f != up) down.push_back(f);
    Table f1 = message(down[0], g_.ends(down[0]).other(x));
    Table p2 = prefix(message(down[1], g_.ends(down[1]).other(x)));
    Table out(static_cast<std::size_t>(t_ + 1), 0);
    for (std::int64_t val = 0; val <= t_; ++val) {
      Integer s = 0;
      for (std::int64_t v1 = 0; v1 + val <= t_; ++v1) {
        const Integer& a = f1[static_cast<std::size_t>(v1)];
        if (sgn(a) == 0) continue;
        s += a * range_sum(p2, std::abs(val - v1), std::min(val + v1, t_ - val - v1));
      }
      out[static_cast<std::size_t>(val)] = s;
    }
    return out;
  }

  Integer total() const {
    VertexId root = 0;
    for (VertexId x : g_.vertices())
      if (g_.degree(x) == 3) {
        root = x;
        break;
      }
    std::vector<EdgeId> es = g_.incident_edges(root);
    Table f1 = message(es[0], g_.ends(es[0]).other(root));
    Table f2 = message(es[1], g_.ends(es[1]).other(root));
    Table p3 = prefix(message(es[2], g_.ends(es[2]).other(root)));
    Integer s = 0;
    for (std::int64_t v1 = 0; v1 <= t_; ++v1)
      for (std::int64_t v2 = 0; v1 + v2 <= t_; ++v2) {
        Integer prod = f1[static_cast<std::size_t>(v1)] * f2[static_cast<std::size_t>(v2)];
        if (sgn(prod) == 0) continue;
        s += prod * range_sum(p3, std::abs(v1 - v2), std::min(v1 + v2, t_ - v1 - v2));
      }
    return s;
  }

 private:
  const Graph& g_;
  std::int64_t t_;
};

}  // namespace

CountReport count_tree_dp(const Graph& g, std::int64_t t) {
  require_13(g);
  if (!is_tree(g)) throw GraphError("count_tree_dp: graph is not a tree");
  if (t < 0) throw std::invalid_argument("dilation must be nonnegative");
  return CountReport{Rational(static_cast<long>(t)), TreeCounter(g, t).total(), CountMethod::tree_dp};
}

CountReport count_points(const Graph& g, const Rational& t, const CountOptions& opts) {
  if (!opts.strict && t.get_den() == 1 && is_tree(g)) return count_tree_dp(g, to_int64(t.get_num()));
  return count_backtracking(inequality_system(g), t, opts);
}

}  // namespace lopoly
