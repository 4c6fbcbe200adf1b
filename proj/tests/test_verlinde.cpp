#include <catch_amalgamated.hpp>

#include <cmath>

#include "lopoly/catalog.hpp"
#include "lopoly/counting.hpp"
#include "lopoly/verlinde.hpp"

using namespace lopoly;

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("series of (x / sin x)^n") {
  // x / sin x = 1 + x^2/6 + 7 x^4/360 + ...
  Polynomial s = x_over_sin_power(1, 4);
  REQUIRE(s.size() >= 5);
  CHECK(s[0] == 1);
  CHECK(s[1] == 0);
  CHECK(s[2] == Rational(1, 6));
  CHECK(s[4] == Rational(7, 360));
  Polynomial s2 = x_over_sin_power(2, 2);
  CHECK(s2[2] == Rational(1, 3));
}

TEST_CASE("trigonometric sum against a double evaluation") {
  for (int n : {2, 4, 6})
    for (int t : {1, 3, 5, 7}) {
      double sum = 0;
      for (int j = 1; j <= t + 1; ++j) sum += 1 / std::pow(std::sin(M_PI * j / (t + 2)), n);
      double approx = std::pow(t + 2, n / 2.0) / std::pow(2.0, n + 1) * sum;
      CHECK(verlinde_count(n, t).get_d() == Catch::Approx(approx).epsilon(1e-9));
    }
}

TEST_CASE("certified values at low precision") {
  CHECK(verlinde_count(2, 1, 16) == 1);
  CHECK(verlinde_count(2, 3, 16) == 5);
  CHECK(verlinde_count(6, 9, 16) == verlinde_count(6, 9, 256));
  CHECK_THROWS_AS(verlinde_count(40, 41, 8, 8), PrecisionError);
}

TEST_CASE("zagier polynomial matches counts") {
  Polynomial z = zagier_polynomial(4);
  for (int t : {1, 3, 5, 7}) CHECK(evaluate(z, t) == Rational(count_points(k4(), t).count));
}

TEST_CASE("cubic volumes") {
  CHECK(cubic_volume(2) == Rational(1, 24));
  CHECK(cubic_volume(4) == Rational(1, 1440));
  CHECK_THROWS(volume_checks(claw(), QuasiPolynomial{}));
}
