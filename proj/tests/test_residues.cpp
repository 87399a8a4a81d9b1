#include "oracles.hpp"

#include <doctest.h>

using namespace testing_support;

TEST_CASE("extended scalars fold rational valuations") {
  ExtScalar a = ExtScalar::monomial(3, R(6), R(1, 2));
  REQUIRE(a.terms().size() == 1);
  CHECK(a.terms()[0] == std::pair<Rational, Rational>{R(2), R(3, 2)});
  CHECK(*a.valuation() == R(3, 2));
  CHECK(a.leading_residue() == 2);
  ExtScalar h = ExtScalar::monomial(3, R(1), R(1, 2));
  CHECK((h - h).is_zero());
  CHECK(h * h == ExtScalar::from_rational(3, R(3)));
  CHECK(h.inverse() * h == ExtScalar::from_rational(3, R(1)));
  CHECK(ExtScalar(3).magnitude().is_neg_inf());
  CHECK_THROWS_AS(ExtScalar(3).leading_residue(), DomainError);
  CHECK_THROWS_AS((h + ExtScalar::from_rational(3, R(1))).inverse(), std::invalid_argument);
}

TEST_CASE("extended scalar ring laws and ultrametric magnitude") {
  std::mt19937_64 rng(29);
  auto draw = [&](std::int64_t p) {
    ExtScalar s(p);
    int k = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < k; ++i)
      s = s + ExtScalar::monomial(p, random_rational(rng, -9, 9, 1), random_rational(rng, -2, 2, 4));
    return s;
  };
  for (int t = 0; t < 200; ++t) {
    std::int64_t p = t % 2 ? 2 : 5;
    ExtScalar a = draw(p), b = draw(p), c = draw(p);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK((a + b).magnitude() <= logmag_umax(a.magnitude(), b.magnitude()));
    ExtScalar m = ExtScalar::monomial(p, random_rational(rng, 1, 9, 1), random_rational(rng, -2, 2, 3));
    CHECK((a * m).magnitude() == logmag_mul(a.magnitude(), m.magnitude()));
  }
}

TEST_CASE("newton data of Laurent polynomials") {
  CHECK(to_newton(LaurentExt::from_rationals(3, {{1, R(1)}})) == NewtonData{{1, R(0)}});
  CHECK(to_newton(LaurentExt::from_rationals(3, {{-1, R(27)}})) == NewtonData{{-1, R(-3)}});
  CHECK(to_newton(LaurentExt::from_rationals(3, {{0, R(1)}, {1, R(1)}, {-1, R(27)}})) ==
        (NewtonData{{0, R(0)}, {1, R(0)}, {-1, R(-3)}}));
  CHECK(mag_at(LaurentExt::from_rationals(3, {{1, R(1)}, {-1, R(27)}}), R(-2)) == LogMag(R(-1)));
}

TEST_CASE("residues at integral radii") {
  CHECK(residue_at(LaurentExt::from_rationals(3, {{1, R(1)}}), R(-1)) == ResiduePoly(3, {{1, 1}}));
  CHECK(residue_at(LaurentExt::from_rationals(3, {{1, R(1)}, {-1, R(27)}}), R(-2)) == ResiduePoly(3, {{-1, 1}}));
  CHECK(residue_at(LaurentExt::from_rationals(3, {{0, R(1)}, {1, R(1)}}), R(0)) == ResiduePoly(3, {{0, 1}, {1, 1}}));
  CHECK(residue_at(LaurentExt::from_rationals(3, {{0, R(2)}, {1, R(-1, 2)}}), R(0)) == ResiduePoly(3, {{0, 2}, {1, 1}}));
  CHECK_THROWS_AS(residue_at(LaurentExt::from_rationals(3, {{1, R(1)}}), R(1, 2)), DomainError);
}

TEST_CASE("p-th powers over the residue field") {
  CHECK(*is_pth_power(ResiduePoly(3, {{3, 1}})) == ResiduePoly(3, {{1, 1}}));
  CHECK_FALSE(is_pth_power(ResiduePoly(3, {{1, 1}, {-1, 1}})).has_value());
  CHECK(*is_pth_power(ResiduePoly(2, {{2, 1}})) == ResiduePoly(2, {{1, 1}}));
  std::mt19937_64 rng(31);
  for (int t = 0; t < 150; ++t) {
    std::int64_t p = std::vector<std::int64_t>{2, 3, 5}[t % 3];
    std::map<std::int64_t, std::int64_t> a, b;
    for (int k = -1; k <= 2; ++k) a[k] = std::uniform_int_distribution<long>(0, p - 1)(rng);
    for (int k = 0; k <= 2; ++k) b[k] = std::uniform_int_distribution<long>(0, p - 1)(rng);
    b[0] = 1;
    ResiduePoly A(p, a), B(p, b);
    if (A.is_zero()) continue;
    ResidueFraction f(pow(A, p), pow(B, p));
    auto root = is_pth_power(f);
    REQUIRE(root.has_value());
    CHECK(pow(root->num(), p) * f.den() == pow(root->den(), p) * f.num());
    CHECK(root_search(f));
    ResidueFraction g(pow(A, p) * ResiduePoly(p, {{1, 1}}), pow(B, p));
    CHECK(is_pth_power(g).has_value() == root_search(g));
  }
}

TEST_CASE("fraction reduction") {
  ResiduePoly x1(3, {{0, 1}, {1, 1}});
  ResidueFraction f(x1 * ResiduePoly(3, {{1, 1}}), x1 * ResiduePoly(3, {{0, 2}}));
  CHECK(f.den() == ResiduePoly(3, {{0, 1}}));
  CHECK(f.num() == ResiduePoly(3, {{1, 2}}));
}

TEST_CASE("function magnitudes and residues") {
  FuncRep a{LaurentExt::from_rationals(3, {{0, R(1)}, {1, R(1)}}), LaurentExt::from_rationals(3, {{0, R(1)}})};
  CHECK(func_eval_mag(a, R(-1)) == LogMag(R(0)));
  CHECK(func_residue(a, R(-1)) == ResidueFraction(ResiduePoly(3, {{0, 1}}), ResiduePoly(3, {{0, 1}})));
  FuncRep b{LaurentExt::from_rationals(3, {{1, R(1)}}), LaurentExt::from_rationals(3, {{0, R(1)}, {1, R(1)}})};
  CHECK(func_eval_mag(b, R(-1)) == LogMag(R(-1)));
  FuncRep c{a.num, a.num};
  CHECK(func_eval_mag(c, R(-1)) == LogMag(R(0)));
  CHECK(func_residue(c, R(-1)) == ResidueFraction(ResiduePoly(3, {{0, 1}}), ResiduePoly(3, {{0, 1}})));
  CHECK_THROWS_AS(func_eval_mag({a.num, LaurentExt(3)}, R(0)), DomainError);
}

TEST_CASE("substitute_shift agrees with pointwise evaluation") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 100; ++t) {
    std::map<std::int64_t, Rational> co;
    for (int k = 0; k <= 4; ++k)
      if (rng() & 1) co[k] = random_rational(rng, -5, 5, 3);
    if (co.empty()) co[0] = R(1);
    LaurentExt L = LaurentExt::from_rationals(3, co);
    if (L.is_zero()) continue;
    Rational alpha = random_rational(rng, -4, 4, 2);
    LaurentExt S = substitute_shift(L, ExtScalar::from_rational(3, alpha));
    for (int s = 0; s < 3; ++s) {
      Rational x = random_rational(rng, -3, 3, 5);
      CHECK(eval_rational(S, x) == eval_rational(L, x + alpha));
    }
  }
}
