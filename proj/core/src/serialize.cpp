#include "lopoly/serialize.hpp"

namespace lopoly {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

namespace {

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long>());
}

}  // namespace

Json rational_json(const Rational& q) { return Json::array({integer_json(q.get_num()), integer_json(q.get_den())}); }

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be [num, den]");
  Rational q(integer_from_json(j[0]), integer_from_json(j[1]));
  q.canonicalize();
  return q;
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [id, inc] : g.edges()) edges.push_back(Json::array({id, inc.first, inc.second}));
  return Json{{"vertices", g.vertices()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  std::map<EdgeId, Incidence> es;
  for (const auto& e : j.at("edges")) es[e.at(0).get<int>()] = Incidence(e.at(1).get<int>(), e.at(2).get<int>());
  return Graph(j.at("vertices").get<std::vector<VertexId>>(), std::move(es));
}

Json trail_json(const Trail& w) { return Json{{"a", w.a}, {"u", w.u}, {"e", w.e}, {"v", w.v}, {"b", w.b}}; }

Trail trail_from_json(const Json& j) {
  return Trail{j.at("a").get<int>(), j.at("u").get<int>(), j.at("e").get<int>(), j.at("v").get<int>(),
               j.at("b").get<int>()};
}

namespace {

Json pairs_json(const std::map<int, int>& m) {
  Json out = Json::array();
  for (const auto& [k, v] : m) out.push_back(Json::array({k, v}));
  return out;
}

std::map<int, int> pairs_from_json(const Json& j) {
  std::map<int, int> out;
  for (const auto& p : j) out[p.at(0).get<int>()] = p.at(1).get<int>();
  return out;
}

}  // namespace

Json move_sequence_json(const MoveSequence& s) {
  Json moves = Json::array();
  for (const Trail& w : s.moves) moves.push_back(trail_json(w));
  Json out{{"moves", moves}, {"edge_relabel", pairs_json(s.edge_relabel)},
           {"vertex_relabel", pairs_json(s.vertex_relabel)}};
  if (!s.snapshots.empty()) {
    Json snaps = Json::array();
    for (auto h : s.snapshots) snaps.push_back(h);
    out["snapshots"] = snaps;
  }
  if (!s.source_tree.empty()) {
    out["source_tree"] = s.source_tree;
    out["target_tree"] = s.target_tree;
  }
  return out;
}

MoveSequence move_sequence_from_json(const Json& j) {
  MoveSequence s;
  for (const auto& w : j.at("moves")) s.moves.push_back(trail_from_json(w));
  if (j.contains("edge_relabel")) s.edge_relabel = pairs_from_json(j["edge_relabel"]);
  if (j.contains("vertex_relabel")) s.vertex_relabel = pairs_from_json(j["vertex_relabel"]);
  if (j.contains("snapshots")) s.snapshots = j["snapshots"].get<std::vector<std::uint64_t>>();
  if (j.contains("source_tree")) s.source_tree = j["source_tree"].get<std::set<EdgeId>>();
  if (j.contains("target_tree")) s.target_tree = j["target_tree"].get<std::set<EdgeId>>();
  return s;
}

Json matrix_json(const IntMatrix& x) {
  Json out = Json::array();
  for (const auto& row : x) {
    Json r = Json::array();
    for (const auto& z : row) r.push_back(integer_json(z));
    out.push_back(r);
  }
  return out;
}

Json site_json(const NniSite& s) {
  Json out = trail_json(s.trail);
  out["c"] = s.c;
  out["d"] = s.d;
  return out;
}

Json quasi_polynomial_json(const QuasiPolynomial& qp) {
  Json cs = Json::array();
  for (const auto& p : qp.constituents) {
    Json c = Json::array();
    for (const auto& q : p) c.push_back(rational_json(q));
    cs.push_back(c);
  }
  return Json{{"period", qp.period}, {"constituents", cs}};
}

QuasiPolynomial quasi_polynomial_from_json(const Json& j) {
  QuasiPolynomial qp;
  qp.period = j.at("period").get<int>();
  for (const auto& c : j.at("constituents")) {
    Polynomial p;
    for (const auto& q : c) p.push_back(rational_from_json(q));
    qp.constituents.push_back(trimmed(std::move(p)));
  }
  if (qp.period < 1 || static_cast<int>(qp.constituents.size()) != qp.period)
    throw std::invalid_argument("quasi-polynomial needs one constituent per residue");
  return qp;
}

Json count_json(const CountReport& r) {
  return Json{{"t", rational_json(r.t)}, {"count", integer_json(r.count)}, {"method", method_name(r.method)}};
}

Json decomposition_json(const Decomposition& d) {
  Json pieces = Json::array();
  for (const auto& p : d.pieces) {
    Json normals = Json::array(), senses = Json::array();
    for (const auto& h : p.region) {
      Json n = Json::array();
      for (const auto& z : h.normal) n.push_back(integer_json(z));
      normals.push_back(n);
      senses.push_back(h.sense == Sense::weak_ge ? "ge" : "lt");
    }
    std::string cases;
    for (PieceCase k : p.cases) cases += case_letter(k);
    Json offset = Json::array();
    for (const auto& z : p.map.offset) offset.push_back(integer_json(z));
    pieces.push_back(Json{{"normals", normals},
                          {"senses", senses},
                          {"matrix", matrix_json(p.map.matrix)},
                          {"offset", offset},
                          {"cases", cases}});
  }
  Json sites = Json::array();
  for (const auto& s : d.sites) sites.push_back(site_json(s));
  return Json{{"source", graph_json(d.source)},
              {"target", graph_json(d.target)},
              {"moves", move_sequence_json(d.move_trace)},
              {"sites", sites},
              {"pieces", pieces}};
}

Json verify_json(const VerifyReport& r) {
  Json dil = Json::array();
  for (const auto& c : r.dilations)
    dil.push_back(Json{{"t", c.t},
                       {"source_points", c.source_points},
                       {"target_points", c.target_points},
                       {"per_piece", c.per_piece}});
  return Json{{"ok", r.ok()}, {"determinants_ok", r.determinants_ok}, {"failures", r.failures}, {"dilations", dil}};
}

}  // namespace lopoly
