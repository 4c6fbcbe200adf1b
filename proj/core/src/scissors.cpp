#include "lopoly/scissors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lopoly/counting.hpp"

namespace lopoly {

bool HalfSpace::holds(const RatVector& w) const {
  int s = sgn(dot(normal, w));
  return sense == Sense::weak_ge ? s >= 0 : s < 0;
}

bool Piece::claims(const RatVector& w) const {
  return std::all_of(region.begin(), region.end(), [&](const HalfSpace& h) { return h.holds(w); });
}

namespace {

constexpr PieceCase kCases[] = {PieceCase::A, PieceCase::B, PieceCase::C, PieceCase::D};

/// Whether the case requires first (resp. second) normal >= 0.
bool first_weak(PieceCase k) { return k == PieceCase::A || k == PieceCase::B; }
bool second_weak(PieceCase k) { return k == PieceCase::A || k == PieceCase::C; }

/// Adds the half-space unless implied; returns false when it is unsatisfiable.
bool add_half_space(std::vector<HalfSpace>& region, IntVector normal, Sense sense) {
  if (is_zero(normal)) return sense == Sense::weak_ge;
  HalfSpace h{std::move(normal), sense};
  if (std::find(region.begin(), region.end(), h) == region.end()) region.push_back(std::move(h));
  return true;
}

bool region_meets(const std::vector<LinearConstraint>& base, const std::vector<HalfSpace>& region) {
  std::vector<LinearConstraint> rows = base;
  for (const auto& h : region) {
    RatVector c(h.normal.size());
    // n . w >= 0  <=>  -n . w <= 0 ;  n . w < 0 stays as is, strict
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = h.sense == Sense::weak_ge ? Rational(-h.normal[i]) : Rational(h.normal[i]);
    rows.push_back(LinearConstraint{std::move(c), 0, h.sense == Sense::strict_lt});
  }
  return feasible(rows, true);
}

IntMatrix relabel_matrix(const MoveSequence& seq, std::size_t m) {
  IntMatrix p(m, IntVector(m, 0));
  for (const auto& [from, to] : seq.edge_relabel) {
    if (from < 1 || to < 1 || static_cast<std::size_t>(from) > m || static_cast<std::size_t>(to) > m)
      throw GraphError("edge relabel leaves the range 1..m");
    p[static_cast<std::size_t>(to - 1)][static_cast<std::size_t>(from - 1)] = 1;
  }
  return p;
}

std::string point_text(const std::vector<std::int64_t>& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ')';
  return os.str();
}

}  // namespace

Decomposition build_decomposition(const Graph& g, const MoveSequence& seq) {
  InequalitySystem sys = inequality_system(g);
  const std::size_t m = sys.dim;
  Decomposition d;
  d.source = g;
  d.move_trace = seq;
  if (seq.edge_relabel.empty()) {
    MoveSequence id = identity_sequence(g);
    d.move_trace.edge_relabel = id.edge_relabel;
    d.move_trace.vertex_relabel = id.vertex_relabel;
  }
  Graph h = g;
  for (const Trail& w : seq.moves) {
    d.sites.push_back(resolve_site(h, w));
    h = apply_nni(h, w);
  }
  d.target = relabel(h, d.move_trace.edge_relabel, d.move_trace.vertex_relabel);

  std::vector<LinearConstraint> base = constraints_at(sys, 1);
  std::vector<Piece> pieces{Piece{{}, UnimodularMap::identity(m), {}}};
  for (const NniSite& site : d.sites) {
    IntVector n1 = first_normal(site, m), n2 = second_normal(site, m);
    std::vector<Piece> next;
    for (const Piece& p : pieces) {
      IntVector q1 = row_times(n1, p.map.matrix), q2 = row_times(n2, p.map.matrix);
      std::vector<Piece> children;
      for (PieceCase k : kCases) {
        Piece child{p.region, {}, p.cases};
        if (!add_half_space(child.region, q1, first_weak(k) ? Sense::weak_ge : Sense::strict_lt)) continue;
        if (!add_half_space(child.region, q2, second_weak(k) ? Sense::weak_ge : Sense::strict_lt)) continue;
        child.map = case_matrix(site, k, m).after(p.map);
        child.cases.push_back(k);
        children.push_back(std::move(child));
      }
      if (children.size() == 1) {
        // The only consistent case inherits the parent's (nonempty) region.
        next.push_back(std::move(children.front()));
        continue;
      }
      for (auto& child : children)
        if (region_meets(base, child.region)) next.push_back(std::move(child));
    }
    pieces = std::move(next);
  }

  UnimodularMap perm{relabel_matrix(d.move_trace, m), IntVector(m, 0)};
  for (auto& p : pieces) p.map = perm.after(p.map);
  d.pieces = std::move(pieces);
  return d;
}

std::optional<std::size_t> locate_piece(const Decomposition& d, const RatVector& w) {
  for (std::size_t i = 0; i < d.pieces.size(); ++i)
    if (d.pieces[i].claims(w)) return i;
  return std::nullopt;
}

RatVector evaluate_piecewise(const Decomposition& d, const RatVector& w, const Rational& t) {
  if (!contains(inequality_system(d.source), w, t)) throw std::domain_error("point is outside the source polytope");
  auto idx = locate_piece(d, w);
  if (!idx) throw std::domain_error("no piece contains the point");
  return d.pieces[*idx].map.apply(w);
}

RatVector replay_point(const Decomposition& d, const RatVector& w) {
  RatVector x = replay_weighted(d.source, w, d.move_trace.moves).second;
  RatVector out(x.size());
  for (const auto& [from, to] : d.move_trace.edge_relabel)
    out[static_cast<std::size_t>(to - 1)] = x[static_cast<std::size_t>(from - 1)];
  return out;
}

VerifyReport verify_decomposition(const Decomposition& d, const std::vector<std::int64_t>& dilations) {
  VerifyReport rep;
  for (const auto& p : d.pieces) {
    Integer det = p.map.det();
    if (det != 1 && det != -1) rep.determinants_ok = false;
  }
  if (!rep.determinants_ok) rep.failures.push_back("a piece map is not unimodular");

  InequalitySystem src = inequality_system(d.source);
  InequalitySystem dst = inequality_system(d.target);
  const std::size_t max_failures = 20;
  auto fail = [&](const std::string& msg) {
    if (rep.failures.size() < max_failures) rep.failures.push_back(msg);
  };

  for (std::int64_t t : dilations) {
    Rational tq(static_cast<long>(t));
    DilationCheck chk;
    chk.t = t;
    chk.per_piece.assign(d.pieces.size(), 0);
    std::set<std::vector<std::int64_t>> images;
    enumerate_points(src, tq, false, [&](const std::vector<std::int64_t>& pt) {
      ++chk.source_points;
      RatVector w(pt.size());
      for (std::size_t i = 0; i < pt.size(); ++i) w[i] = Rational(static_cast<long>(pt[i]));
      std::optional<std::size_t> owner;
      std::size_t claims = 0;
      for (std::size_t i = 0; i < d.pieces.size(); ++i)
        if (d.pieces[i].claims(w)) {
          ++claims;
          if (!owner) owner = i;
        }
      std::string at = " at t=" + std::to_string(t) + ", point " + point_text(pt);
      if (claims != 1) {
        fail("point claimed by " + std::to_string(claims) + " pieces" + at);
        if (!owner) return;
      }
      ++chk.per_piece[*owner];
      RatVector img = d.pieces[*owner].map.apply(w);
      if (img != replay_point(d, w)) fail("piece map disagrees with weighted replay" + at);
      std::vector<std::int64_t> key(img.size());
      for (std::size_t i = 0; i < img.size(); ++i) {
        if (img[i].get_den() != 1) {
          fail("non-integral image" + at);
          return;
        }
        key[i] = to_int64(img[i].get_num());
      }
      if (!contains(dst, img, tq)) fail("image outside the target polytope" + at);
      if (!images.insert(key).second) fail("two points share the image " + point_text(key) + " at t=" + std::to_string(t));
    });
    chk.target_points = static_cast<std::uint64_t>(to_int64(count_backtracking(dst, tq).count));
    if (chk.target_points != images.size())
      fail("images cover " + std::to_string(images.size()) + " of " + std::to_string(chk.target_points) +
           " target points at t=" + std::to_string(t));
    rep.dilations.push_back(std::move(chk));
  }
  return rep;
}

}  // namespace lopoly
