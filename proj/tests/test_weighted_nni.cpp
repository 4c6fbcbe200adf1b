#include <catch_amalgamated.hpp>

#include <random>

#include "lopoly/catalog.hpp"
#include "lopoly/weighted_nni.hpp"
#include "oracle.hpp"

using namespace lopoly;

namespace {

RatVector W(std::initializer_list<long> xs) {
  RatVector w;
  for (long x : xs) w.emplace_back(x);
  return w;
}

}  // namespace

TEST_CASE("pivot update on theta") {
  NniSite site = resolve_site(theta(), Trail{2, 1, 3, 2, 1});
  CHECK(site.c == 1);
  CHECK(site.d == 2);
  // w3 + (w1 + w2) - 2 max(w1, w2)
  CHECK(pivot_update(W({3, 1, 2}), site) == 0);
  CHECK(pivot_update(W({1, 3, 2}), site) == 0);
  CHECK(pivot_update(W({2, 2, 1}), site) == 1);
  auto [g, w] = apply_weighted_nni(theta(), W({3, 1, 2}), site);
  CHECK(isomorphic(g, dumbbell()));
  CHECK(w == W({3, 1, 0}));
}

TEST_CASE("theta site has the single hyperplane w1 = w2") {
  NniSite site = resolve_site(theta(), Trail{2, 1, 3, 2, 1});
  auto hs = site_hyperplanes(site, 3);
  REQUIRE(hs.size() == 1);
  IntVector n = hs[0].normal;
  CHECK(((n == IntVector{1, -1, 0}) || (n == IntVector{-1, 1, 0})));
}

TEST_CASE("case matrices are unimodular and match the max formula") {
  std::mt19937_64 rng(11);
  for (int m = 3; m <= 6; ++m)
    for (const Graph& g : connected_graphs(m))
      for (const Trail& tr : oracle::trails(g)) {
        NniSite site = resolve_site(g, tr);
        for (PieceCase k : {PieceCase::A, PieceCase::B, PieceCase::C, PieceCase::D}) {
          Integer d = case_matrix(site, k, g.edge_count()).det();
          CHECK((d == 1 || d == -1));
        }
        for (int i = 0; i < 20; ++i) {
          RatVector w(g.edge_count());
          for (auto& x : w) x = oracle::random_rational(rng, -3, 3);
          RatVector want = w;
          want[tr.e - 1] = oracle::pivot_weight(g, w, tr);
          CHECK(weighted_step(w, site) == want);
          CHECK(case_matrix(site, case_of(w, site), g.edge_count()).apply(w) == want);
        }
      }
}

TEST_CASE("weighted replay preserves the polytope") {
  std::mt19937_64 rng(5);
  Graph g = k4();
  std::vector<Trail> moves;
  Graph cur = g;
  for (int i = 0; i < 3; ++i) {
    auto ts = oracle::trails(cur);
    moves.push_back(ts[static_cast<std::size_t>(i) % ts.size()]);
    cur = apply_nni(cur, moves.back());
  }
  for (int i = 0; i < 200; ++i) {
    Rational t = oracle::random_rational(rng, 0, 4);
    RatVector w = oracle::random_point(rng, g, t);
    auto [h, w2] = replay_weighted(g, w, moves);
    CHECK(oracle::in_polytope(h, w2, t));
  }
}

TEST_CASE("unimodular map composition") {
  UnimodularMap a{{{1, 0}, {1, 1}}, {0, 1}};
  UnimodularMap b{{{0, 1}, {1, 0}}, {2, 0}};
  RatVector w{Rational(1, 2), Rational(3)};
  CHECK(a.after(b).apply(w) == a.apply(b.apply(w)));
  CHECK(UnimodularMap::identity(3).apply(W({1, 2, 3})) == W({1, 2, 3}));
}
