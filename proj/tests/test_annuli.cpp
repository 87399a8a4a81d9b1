#include "helpers.hpp"

#include <doctest.h>

using namespace testing_support;

TEST_CASE("length") {
  CHECK(*length(annulus(R(-3), R(0))) == 3);
  CHECK_FALSE(length(Annulus(LogInterval::below(R(0), false))).has_value());
  CHECK(*length(Annulus(LogInterval::point(R(-1, 2)))) == 0);
  CHECK_THROWS_AS(Annulus(LogInterval::empty()), std::invalid_argument);
  CHECK_THROWS_AS(Annulus(open_iv(R(0), R(1)), 2), std::invalid_argument);
}

TEST_CASE("isomorphism up to translation and reflection") {
  CHECK(is_isomorphic(annulus(R(-3), R(0)), annulus(R(-5), R(-2))));
  CHECK(is_isomorphic(annulus(R(-3), R(0)), annulus(R(0), R(3))));
  CHECK_FALSE(is_isomorphic(annulus(R(-3), R(0)), annulus(R(-2), R(0))));
  CHECK(is_isomorphic(Annulus(LogInterval(R(-3), true, R(0), false)), Annulus(LogInterval(R(-3), false, R(0), true))));
  CHECK_FALSE(is_isomorphic(Annulus(LogInterval(R(-3), true, R(0), true)), annulus(R(-3), R(0))));
  CHECK(is_isomorphic(Annulus(LogInterval::below(R(0), false)), Annulus(LogInterval::above(R(4), false))));
}

TEST_CASE("isomorphism is invariant under random moves") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    Rational a = random_rational(rng, -5, 5, 3);
    Rational b = a + random_rational(rng, 1, 5, 3);
    LogInterval I(a, rng() & 1, b, rng() & 1);
    LogInterval J = I.translate(random_rational(rng, -4, 4, 5));
    if (rng() & 1) J = J.reflect();
    CHECK(is_isomorphic(Annulus(I), Annulus(J)));
    CHECK(length(Annulus(I)) == length(Annulus(J)));
  }
}

TEST_CASE("midpoint, distance and Kummer pullback") {
  CHECK(midpoint(annulus(R(-3), R(0))) == R(-3, 2));
  CHECK(distance(R(-1), R(-5, 2)) == R(3, 2));
  CHECK(distance(R(7, 3), R(7, 3)) == 0);
  CHECK_THROWS_AS(midpoint(Annulus(LogInterval::below(R(0), false))), DomainError);
  CHECK(kummer_pullback(annulus(R(-3), R(0)), 3).interval == open_iv(R(-1), R(0)));
  CHECK(kummer_pullback(annulus(R(-3), R(1)), 1).interval == open_iv(R(-3), R(1)));
  CHECK(kummer_pullback(Annulus(LogInterval::below(R(0), false)), 2).interval == LogInterval::below(R(0), false));
  CHECK(skeleton_interval(annulus(R(-3), R(0))) == open_iv(R(-3), R(0)));
  for (std::int64_t n = 1; n <= 9; ++n)
    CHECK(*length(kummer_pullback(annulus(R(-7), R(2)), n)) == Rational(9) / Rational(n));
}
