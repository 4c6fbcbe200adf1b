#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "lopoly/catalog.hpp"
#include "lopoly/counting.hpp"
#include "lopoly/graph.hpp"
#include "lopoly/nni.hpp"
#include "lopoly/quasi_polynomial.hpp"
#include "lopoly/reflexivity.hpp"
#include "lopoly/scissors.hpp"
#include "lopoly/serialize.hpp"
#include "lopoly/verlinde.hpp"
#include "lopoly/weighted_nni.hpp"

namespace lopoly::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A command failed its own check (validation, verification); the report has
/// already been written.
struct CheckFailed {};

struct Settings {
  unsigned threads = 1;
  std::string format = "table";
  bool json() const { return format == "json"; }
};

Graph load_graph(const std::string& source) {
  if (source.empty()) throw UsageError("missing graph");
  if (source.front() == '@') return named_graph(source.substr(1));
  return read_graph_file(source);
}

Graph load_valid_graph(const std::string& source) {
  Graph g = load_graph(source);
  require_13(g);
  return g;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Rational parse_value(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument&) {
    throw UsageError("not a number: '" + s + "'");
  }
}

std::int64_t parse_int(const std::string& s) {
  Rational q = parse_value(s);
  if (q.get_den() != 1) throw UsageError("not an integer: '" + s + "'");
  return to_int64(q.get_num());
}

/// "a..b" or a single integer.
std::vector<std::int64_t> parse_range(const std::string& s) {
  auto dots = s.find("..");
  std::int64_t lo, hi;
  if (dots == std::string::npos) {
    lo = hi = parse_int(s);
  } else {
    lo = parse_int(s.substr(0, dots));
    hi = parse_int(s.substr(dots + 2));
  }
  if (lo < 0 || hi < lo) throw UsageError("bad range '" + s + "'");
  std::vector<std::int64_t> out;
  for (std::int64_t t = lo; t <= hi; ++t) out.push_back(t);
  return out;
}

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_value(item));
  return out;
}

Trail parse_trail(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 5) throw UsageError("trail must be a,u,e,v,b");
  std::vector<int> x;
  for (const auto& p : parts) x.push_back(static_cast<int>(parse_int(p)));
  return Trail{x[0], x[1], x[2], x[3], x[4]};
}

MoveSequence load_moves(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return move_sequence_from_json(Json::parse(in));
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string polynomial_text(const Polynomial& p) {
  std::string s;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (sgn(p[k]) == 0) continue;
    if (!s.empty()) s += sgn(p[k]) > 0 ? " + " : " - ";
    else if (sgn(p[k]) < 0) s += "-";
    Rational a = abs(p[k]);
    if (k == 0 || a != 1) s += to_string(a);
    if (k > 0) s += (a == 1 ? "" : " ") + std::string("t") + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return s.empty() ? "0" : s;
}

void print_qp(std::ostream& out, const QuasiPolynomial& qp) {
  out << "period " << qp.period << "\n";
  for (int r = 0; r < qp.period; ++r)
    out << "  t = " << r << " mod " << qp.period << ": " << polynomial_text(qp.constituents[static_cast<std::size_t>(r)])
        << "\n";
}

std::string weights_text(const RatVector& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + to_string(w[i]);
  return s;
}

struct TableRow {
  int m;
  std::string graph;
};

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows{
      {3, "claw"}, {5, "caterpillar-2"}, {7, "caterpillar-3"}, {9, "caterpillar-4"}, {9, "spider"}};
  return rows;
}

/// Holds option storage for every subcommand and wires the handlers.
class App {
 public:
  App(std::ostream& out, std::ostream& err) : out_(out), err_(err), app_("Lattice points, NNI moves and dissections of {1,3}-graph polytopes", "lopoly") {
    app_.add_option("--threads", settings_.threads, "worker threads for lattice-point counting")
        ->check(CLI::Range(1u, 256u));
    app_.add_option("--format", settings_.format, "output format")->check(CLI::IsMember({"table", "json"}));
    app_.require_subcommand(1);
    graph_commands();
    nni_commands();
    wnni_commands();
    ehrhart_commands();
    scissors_commands();
    reflexive_commands();
    table_command();
  }

  int run(std::vector<std::string> args) {
    std::reverse(args.begin(), args.end());
    try {
      app_.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
      out_ << app_.help();
      return ok;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app_.help("", CLI::AppFormatMode::All);
      return ok;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return usage_error;
    }
    try {
      if (action_) action_();
      return ok;
    } catch (const CheckFailed&) {
      return domain_error;
    } catch (const UsageError& e) {
      err_ << "error: " << e.what() << "\n";
      return usage_error;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << "\n";
      return domain_error;
    }
  }

 private:
  CLI::App* sub(CLI::App* parent, const std::string& name, const std::string& help, std::function<void()> fn) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->callback([this, fn] { action_ = fn; });
    return s;
  }

  CountOptions count_options() const { return CountOptions{settings_.threads, false}; }

  void graph_commands() {
    CLI::App* g = app_.add_subcommand("graph", "graph files: validation and summary");
    g->require_subcommand(1);
    auto* v = sub(g, "validate", "check the {1,3} conditions", [this] {
      Graph gr = load_graph(graph_);
      ValidationReport rep = validate_13(gr);
      if (settings_.json()) {
        out_ << Json{{"ok", rep.ok()}, {"bad_degree", rep.bad_degree}, {"unbounded", rep.unbounded}}.dump() << "\n";
      } else {
        out_ << (rep.ok() ? "valid {1,3}-graph" : rep.message()) << "\n";
      }
      if (!rep.ok()) {
        if (settings_.json()) err_ << rep.message() << "\n";
        throw CheckFailed{};
      }
    });
    v->add_option("--graph,graph", graph_, "graph file or @name")->required();

    auto* show = sub(g, "show", "print a graph in file format", [this] { print_graph(load_graph(graph_)); });
    show->add_option("--graph,graph", graph_, "graph file or @name")->required();

    auto* i = sub(g, "info", "degree sequence, edge classes, cycle rank", [this] {
      Graph gr = load_graph(graph_);
      EdgeClass cls = classify_edges(gr);
      ValidationReport rep = validate_13(gr);
      Json j{{"vertices", gr.vertex_count()},
             {"edges", gr.edge_count()},
             {"degree_sequence", degree_sequence(gr)},
             {"internal", cls.internal},
             {"external", cls.external},
             {"connected", is_connected(gr)},
             {"cycle_rank", cycle_rank(gr)},
             {"tree", is_tree(gr)},
             {"valid", rep.ok()}};
      if (rep.ok()) j["canonical_form"] = canonical_form(gr);
      if (settings_.json()) {
        out_ << j.dump() << "\n";
        return;
      }
      out_ << "vertices " << gr.vertex_count() << ", edges " << gr.edge_count() << "\n"
           << "degree sequence " << join(degree_sequence(gr)) << "\n"
           << "internal " << join({cls.internal.begin(), cls.internal.end()}) << "\n"
           << "external " << join({cls.external.begin(), cls.external.end()}) << "\n"
           << "connected " << (is_connected(gr) ? "yes" : "no") << ", cycle rank " << cycle_rank(gr) << "\n"
           << "{1,3}-graph " << (rep.ok() ? "yes" : "no") << "\n";
    });
    i->add_option("--graph,graph", graph_, "graph file or @name")->required();
  }

  void print_graph(const Graph& g) {
    if (settings_.json())
      out_ << graph_json(g).dump() << "\n";
    else
      out_ << format_graph(g);
  }

  void nni_commands() {
    CLI::App* n = app_.add_subcommand("nni", "nearest neighbor interchange moves");
    n->require_subcommand(1);
    auto* a = sub(n, "apply", "apply one move", [this] { print_graph(apply_nni(load_graph(graph_), parse_trail(trail_))); });
    a->add_option("--graph", graph_, "graph file or @name")->required();
    a->add_option("--trail", trail_, "a,u,e,v,b")->required();

    auto* s = sub(n, "sequence", "moves turning one graph into another", [this] {
      auto [ga, gb] = graph_pair();
      MoveSequence seq = is_tree(ga) && !restrict_ ? tree_sequence(ga, gb) : graph_sequence(ga, gb, restrict_);
      if (snapshots_) record_snapshots(ga, seq);
      if (replay(ga, seq) != gb) throw std::logic_error("constructed sequence does not reach the target");
      if (settings_.json()) {
        out_ << move_sequence_json(seq).dump() << "\n";
        return;
      }
      out_ << seq.moves.size() << " moves\n";
      for (const Trail& w : seq.moves)
        out_ << "  a=" << w.a << " u=" << w.u << " e=" << w.e << " v=" << w.v << " b=" << w.b << "\n";
      out_ << "edge relabel";
      for (const auto& [x, y] : seq.edge_relabel) out_ << " " << x << "->" << y;
      out_ << "\n";
    });
    pair_options(s);
    s->add_flag("--restrict", restrict_, "keep every pivot inside spanning trees of both graphs");
    s->add_flag("--snapshots", snapshots_, "record a hash of every intermediate graph");

    auto* r = sub(n, "replay", "replay a move file", [this] {
      Graph g = load_graph(graph_);
      MoveSequence seq = load_moves(moves_);
      Graph result = seq.edge_relabel.empty() ? replay_moves(g, seq.moves) : replay(g, seq);
      if (!target_.empty()) {
        bool same = result == load_graph(target_);
        if (settings_.json())
          out_ << Json{{"matches_target", same}, {"result", graph_json(result)}}.dump() << "\n";
        else
          out_ << (same ? "replay matches target" : "replay does NOT match target") << "\n";
        if (!same) throw CheckFailed{};
        return;
      }
      print_graph(result);
    });
    r->add_option("--graph", graph_, "graph file or @name")->required();
    r->add_option("--moves", moves_, "move sequence JSON")->required();
    r->add_option("--target", target_, "expected result");
  }

  void wnni_commands() {
    CLI::App* w = app_.add_subcommand("wnni", "weighted NNI");
    w->require_subcommand(1);
    auto* a = sub(w, "apply", "apply one weighted move", [this] {
      Graph g = load_valid_graph(graph_);
      RatVector wt = parse_list(weights_);
      if (wt.size() != g.edge_count()) throw UsageError("expected " + std::to_string(g.edge_count()) + " weights");
      NniSite site = resolve_site(g, parse_trail(trail_));
      auto [g2, w2] = apply_weighted_nni(g, wt, site);
      PieceCase k = case_of(wt, site);
      const std::size_t m = g.edge_count();
      if (settings_.json()) {
        Json ws = Json::array();
        for (const auto& q : w2) ws.push_back(rational_json(q));
        Json hs = Json::array();
        for (const auto& h : site_hyperplanes(site, m)) hs.push_back(matrix_json({h.normal})[0]);
        out_ << Json{{"graph", graph_json(g2)},
                     {"weights", ws},
                     {"site", site_json(site)},
                     {"case", std::string(1, case_letter(k))},
                     {"matrix", matrix_json(case_matrix(site, k, m).matrix)},
                     {"hyperplanes", hs}}
                    .dump()
             << "\n";
        return;
      }
      out_ << "site c=" << site.c << " d=" << site.d << ", case " << case_letter(k) << "\n"
           << "weights " << weights_text(w2) << "\n";
      out_ << format_graph(g2);
    });
    a->add_option("--graph", graph_, "graph file or @name")->required();
    a->add_option("--weights", weights_, "comma-separated weights, edge 1 first")->required();
    a->add_option("--trail", trail_, "a,u,e,v,b")->required();
  }

  void ehrhart_commands() {
    CLI::App* e = app_.add_subcommand("ehrhart", "lattice-point counts and quasi-polynomials");
    e->require_subcommand(1);
    auto* c = sub(e, "count", "count lattice points of tP_G", [this] {
      Graph g = load_valid_graph(graph_);
      std::vector<Rational> ts;
      if (t_.find("..") != std::string::npos) {
        for (auto t : parse_range(t_)) ts.emplace_back(static_cast<long>(t));
      } else {
        ts.push_back(parse_value(t_));
      }
      Json rows = Json::array();
      for (const Rational& t : ts) {
        if (sgn(t) < 0) throw UsageError("t must be nonnegative");
        CountReport rep;
        if (method_ == "tree-dp") {
          if (t.get_den() != 1) throw UsageError("tree-dp needs an integer t");
          rep = count_tree_dp(g, to_int64(t.get_num()));
        } else if (method_ == "backtracking") {
          rep = count_backtracking(inequality_system(g), t, count_options());
        } else {
          rep = count_points(g, t, count_options());
        }
        if (settings_.json())
          rows.push_back(count_json(rep));
        else
          out_ << to_string(rep.t) << "\t" << rep.count << "\n";
      }
      if (settings_.json()) out_ << rows.dump() << "\n";
    });
    c->add_option("--graph", graph_, "graph file or @name")->required();
    c->add_option("--t", t_, "dilation: a..b or a single (rational) value")->required();
    c->add_option("--method", method_, "counting method")->check(CLI::IsMember({"auto", "backtracking", "tree-dp"}));

    auto* q = sub(e, "qp", "Ehrhart quasi-polynomial", [this] {
      QuasiPolynomial qp = quasi_polynomial(load_valid_graph(graph_), count_options());
      if (settings_.json())
        out_ << quasi_polynomial_json(qp).dump() << "\n";
      else
        print_qp(out_, qp);
    });
    q->add_option("--graph", graph_, "graph file or @name")->required();

    auto* v = sub(e, "verlinde", "trigonometric count for cubic graphs at odd t", [this] {
      if (n_ <= 0 || n_ % 2) throw UsageError("--n must be a positive even integer");
      Json rows = Json::array();
      for (auto t : parse_range(t_)) {
        if (t % 2 == 0) continue;
        Integer value = verlinde_count(n_, static_cast<int>(t), precision_);
        Rational poly = evaluate(zagier_polynomial(n_), Rational(static_cast<long>(t)));
        if (settings_.json())
          rows.push_back(Json{{"t", t}, {"verlinde", integer_json(value)}, {"zagier", rational_json(poly)}});
        else
          out_ << t << "\t" << value << "\t" << to_string(poly) << "\n";
      }
      if (settings_.json()) out_ << Json{{"n", n_}, {"values", rows}, {"zagier", quasi_polynomial_json(QuasiPolynomial{1, {zagier_polynomial(n_)}})["constituents"][0]}}.dump() << "\n";
    });
    v->add_option("--n", n_, "number of vertices (even)")->required();
    v->add_option("--t", t_, "range a..b; even values are skipped")->required();
    v->add_option("--precision", precision_, "starting precision in bits (default: LOPOLY_PRECISION or 128)");

    auto* vol = sub(e, "volume", "leading coefficient against |B_n| / (2 n!)", [this] {
      Graph g = load_valid_graph(graph_);
      QuasiPolynomial qp = quasi_polynomial(g, count_options());
      VolumeReport rep = volume_checks(g, qp);
      if (settings_.json()) {
        Json lead = Json::array();
        for (const auto& x : rep.leading) lead.push_back(rational_json(x));
        out_ << Json{{"expected", rational_json(rep.expected)}, {"leading", lead}, {"ok", rep.ok()}}.dump() << "\n";
      } else {
        out_ << "expected " << to_string(rep.expected) << ", leading";
        for (const auto& x : rep.leading) out_ << " " << to_string(x);
        out_ << (rep.ok() ? "  PASS" : "  FAIL") << "\n";
      }
      if (!rep.ok()) throw CheckFailed{};
    });
    vol->add_option("--graph", graph_, "connected cubic graph")->required();

    auto* sr = sub(e, "semireflexive", "compare L(s) with L(floor s)", [this] {
      SemiReflexiveReport rep = semi_reflexive_check(load_valid_graph(graph_), parse_list(samples_), count_options());
      Json rows = Json::array();
      for (const auto& x : rep.entries) {
        if (settings_.json())
          rows.push_back(Json{{"s", rational_json(x.s)}, {"count", integer_json(x.count_at_s)},
                              {"count_at_floor", integer_json(x.count_at_floor)}, {"ok", x.ok()}});
        else
          out_ << to_string(x.s) << "\t" << x.count_at_s << "\t" << x.count_at_floor << "\t"
               << (x.ok() ? "ok" : "MISMATCH") << "\n";
      }
      if (settings_.json()) out_ << Json{{"ok", rep.ok()}, {"samples", rows}}.dump() << "\n";
      if (!rep.ok()) throw CheckFailed{};
    });
    sr->add_option("--graph", graph_, "graph file or @name")->required();
    sr->add_option("--s", samples_, "comma-separated rational dilations")->required();
  }

  std::pair<Graph, Graph> graph_pair() {
    std::vector<std::string> specs = graphs_;
    if (!a_.empty()) specs.insert(specs.begin(), a_);
    if (!b_.empty()) specs.push_back(b_);
    if (specs.size() != 2) throw UsageError("need exactly two graphs (--a/--b or --graph twice)");
    return {load_valid_graph(specs[0]), load_valid_graph(specs[1])};
  }

  void pair_options(CLI::App* s) {
    s->add_option("--a", a_, "source graph");
    s->add_option("--b", b_, "target graph");
    s->add_option("--graph", graphs_, "source then target (alternative to --a/--b)");
  }

  Decomposition decomposition() {
    auto [ga, gb] = graph_pair();
    MoveSequence seq = moves_.empty() ? graph_sequence(ga, gb, restrict_) : load_moves(moves_);
    if (seq.edge_relabel.empty()) seq.edge_relabel = identity_sequence(ga).edge_relabel;
    if (seq.vertex_relabel.empty()) seq.vertex_relabel = identity_sequence(ga).vertex_relabel;
    if (replay(ga, seq) != gb) throw std::domain_error("move sequence does not carry the source onto the target");
    return build_decomposition(ga, seq);
  }

  void scissors_commands() {
    CLI::App* s = app_.add_subcommand("scissors", "piecewise-unimodular dissections");
    s->require_subcommand(1);
    auto* b = sub(s, "build", "dissect P_A along a move sequence to B", [this] {
      Decomposition d = decomposition();
      if (settings_.json()) {
        out_ << decomposition_json(d).dump() << "\n";
        return;
      }
      out_ << d.sites.size() << " moves, " << d.pieces.size() << " pieces\n";
      for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        const Piece& p = d.pieces[i];
        std::string cases;
        for (PieceCase k : p.cases) cases += case_letter(k);
        out_ << "piece " << i << " cases " << (cases.empty() ? "-" : cases) << " det " << p.map.det() << "\n";
      }
    });
    pair_options(b);
    b->add_option("--moves", moves_, "move sequence JSON (default: constructed)");
    b->add_flag("--restrict", restrict_, "construct the sequence with pivots in spanning trees");

    auto* v = sub(s, "verify", "check the dissection on lattice points", [this] {
      Decomposition d = decomposition();
      VerifyReport rep = verify_decomposition(d, parse_range(t_));
      if (settings_.json()) {
        Json j = verify_json(rep);
        j["pieces"] = d.pieces.size();
        out_ << j.dump() << "\n";
      } else {
        out_ << d.pieces.size() << " pieces, determinants " << (rep.determinants_ok ? "all +-1" : "NOT unimodular")
             << "\n";
        for (const auto& c : rep.dilations)
          out_ << "t=" << c.t << "  source " << c.source_points << "  target " << c.target_points << "\n";
        for (const auto& f : rep.failures) out_ << "  " << f << "\n";
        out_ << (rep.ok() ? "PASS" : "FAIL") << "\n";
      }
      if (!rep.ok()) throw CheckFailed{};
    });
    pair_options(v);
    v->add_option("--moves", moves_, "move sequence JSON (default: constructed)");
    v->add_flag("--restrict", restrict_, "construct the sequence with pivots in spanning trees");
    v->add_option("--t", t_, "dilations a..b")->required();
  }

  void reflexive_commands() {
    CLI::App* r = app_.add_subcommand("reflexive", "the translate 4P_G - 1");
    r->require_subcommand(1);
    auto* c = sub(r, "check", "lattice characterization of reflexivity", [this] {
      ReflexivityReport rep = reflexivity_check(load_valid_graph(graph_), max_t_);
      if (settings_.json()) {
        Json counts = Json::array();
        for (const auto& [x, y] : rep.counts) counts.push_back(Json::array({x, y}));
        out_ << Json{{"ok", rep.ok()}, {"origin_interior", rep.origin_interior}, {"counts", counts}}.dump() << "\n";
      } else {
        out_ << "origin interior: " << (rep.origin_interior ? "yes" : "no") << "\n";
        for (std::size_t t = 0; t < rep.counts.size(); ++t)
          out_ << "t=" << t << "  interior of (t+1)Q: " << rep.counts[t].first << "  tQ: " << rep.counts[t].second
               << "\n";
        out_ << (rep.ok() ? "reflexive" : "NOT reflexive") << "\n";
      }
      if (!rep.ok()) throw CheckFailed{};
    });
    c->add_option("--graph", graph_, "graph file or @name")->required();
    c->add_option("--T", max_t_, "largest t checked")->check(CLI::NonNegativeNumber);

    auto* h = sub(r, "hstar", "h*-vector of 4P_G", [this] {
      std::vector<Integer> hs = h_star(load_valid_graph(graph_));
      Json arr = Json::array();
      for (const auto& x : hs) arr.push_back(integer_json(x));
      if (settings_.json()) {
        out_ << Json{{"h_star", arr}, {"palindromic", is_palindromic(hs)}}.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < hs.size(); ++i) out_ << (i ? " " : "") << hs[i];
        out_ << "\n" << (is_palindromic(hs) ? "palindromic" : "not palindromic") << "\n";
      }
    });
    h->add_option("--graph", graph_, "graph file or @name")->required();

    auto* v = sub(r, "vertices", "vertices of tP_G (or of 4P_G - 1)", [this] {
      Graph g = load_valid_graph(graph_);
      InequalitySystem sys = translate_ ? reflexive_system(g) : inequality_system(g);
      auto vs = vertex_enumeration(sys, parse_value(scale_));
      Json arr = Json::array();
      for (const auto& v : vs) {
        if (settings_.json()) {
          Json p = Json::array();
          for (const auto& x : v) p.push_back(rational_json(x));
          arr.push_back(p);
        } else {
          out_ << "(" << weights_text(v) << ")\n";
        }
      }
      if (settings_.json()) out_ << arr.dump() << "\n";
    });
    v->add_option("--graph", graph_, "graph file or @name")->required();
    v->add_option("--t", scale_, "dilation of P_G (default 1)");
    v->add_flag("--translate", translate_, "use 4P_G - 1 instead");
  }

  void table_command() {
    auto* p = sub(&app_, "paper-table", "quasi-polynomials of the small {1,3}-trees", [this] {
      Json rows = Json::array();
      for (const auto& row : table_rows()) {
        QuasiPolynomial qp = quasi_polynomial(named_graph(row.graph), count_options());
        rows.push_back(Json{{"m", row.m}, {"graph", row.graph}, {"qp", quasi_polynomial_json(qp)}});
      }
      bool all_ok = true;
      if (!check_.empty()) {
        std::ifstream in(check_);
        if (!in) throw UsageError("cannot open " + check_);
        Json golden = Json::parse(in);
        for (auto& row : rows) {
          bool found = false, same = false;
          for (const auto& g : golden.at("rows"))
            if (g.at("m") == row["m"]) {
              found = true;
              same = quasi_polynomial_from_json(g.at("qp")) == quasi_polynomial_from_json(row["qp"]);
            }
          row["matches_golden"] = found && same;
          all_ok = all_ok && found && same;
        }
      }
      if (settings_.json()) {
        out_ << Json{{"rows", rows}}.dump() << "\n";
      } else {
        for (const auto& row : rows) {
          out_ << "m=" << row["m"].get<int>() << " (" << row["graph"].get<std::string>() << ")";
          if (row.contains("matches_golden")) out_ << (row["matches_golden"].get<bool>() ? "  matches" : "  DIFFERS");
          out_ << "\n";
          print_qp(out_, quasi_polynomial_from_json(row["qp"]));
        }
      }
      if (!all_ok) throw CheckFailed{};
    });
    p->alias("tree-table");
    p->add_option("--check", check_, "golden JSON to compare against");
  }

  std::ostream& out_;
  std::ostream& err_;
  CLI::App app_;
  Settings settings_;
  std::function<void()> action_;

  std::string graph_, trail_, moves_, target_, weights_, t_, method_ = "auto", samples_, a_, b_, check_,
      scale_ = "1";
  std::vector<std::string> graphs_;
  bool restrict_ = false, snapshots_ = false, translate_ = false;
  int n_ = 0;
  long precision_ = 0;
  std::int64_t max_t_ = 3;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  App app(out, err);
  return app.run(args);
}

}  // namespace lopoly::cli
