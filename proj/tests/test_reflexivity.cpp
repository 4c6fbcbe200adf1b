#include <catch_amalgamated.hpp>

#include "lopoly/catalog.hpp"
#include "lopoly/quasi_polynomial.hpp"
#include "lopoly/reflexivity.hpp"

using namespace lopoly;

TEST_CASE("translated system has right-hand side one") {
  InequalitySystem q = reflexive_system(claw());
  for (const auto& r : q.rows) {
    CHECK(r.alpha == 0);
    CHECK(r.beta == 1);
  }
  CHECK(contains_strictly(q, RatVector(3, 0), 0));
}

TEST_CASE("claw is reflexive and its h* is 1 7 7 1") {
  CHECK(reflexivity_check(claw(), 3).ok());
  CHECK(h_star(claw()) == std::vector<Integer>{1, 7, 7, 1});
}

TEST_CASE("h* is palindromic for small graphs") {
  for (const Graph& g : {theta(), dumbbell(), caterpillar_tree(2), k4()}) {
    auto h = h_star(g);
    CHECK(is_palindromic(h));
    CHECK(h.front() == 1);
  }
  CHECK_FALSE(is_palindromic({1, 2, 3}));
}

TEST_CASE("origin on the boundary is not reflexive") {
  // 0 <= x <= 1
  InequalitySystem q{1, {{{1}, 0, 1}, {{-1}, 0, 0}}};
  ReflexivityReport rep = reflexivity_check(q, 3);
  CHECK_FALSE(rep.origin_interior);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("vertices of P_dumbbell") {
  auto vs = vertex_enumeration(inequality_system(dumbbell()), 1);
  auto has = [&](RatVector v) { return std::find(vs.begin(), vs.end(), v) != vs.end(); };
  CHECK(has({0, 0, 0}));
  CHECK(has({Rational(1, 4), Rational(1, 4), Rational(1, 2)}));
  CHECK(has({Rational(1, 2), 0, 0}));
  CHECK(has({0, Rational(1, 2), 0}));
  CHECK(has({Rational(1, 3), Rational(1, 3), Rational(1, 3)}) == false);
}

TEST_CASE("vertices of 4P - 1 are integral") {
  auto vs = vertex_enumeration(reflexive_system(theta()), 1);
  CHECK_FALSE(vs.empty());
  for (const auto& v : vs)
    for (const auto& x : v) CHECK(x.get_den() == 1);
}
