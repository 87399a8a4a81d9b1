#pragma once

// Shared generators and small constructors for the test suites.

#include "annulab/errors.hpp"
#include "annulab/lengthlab.hpp"
#include "annulab/torsors.hpp"

#include <random>
#include <string>

namespace testing_support {

using namespace annulab;

inline Rational R(const std::string& s) { return parse_rational(s); }
inline Rational R(const char* s) { return parse_rational(s); }
inline Rational R(long n) { return Rational(n); }
inline Rational R(int n) { return Rational(static_cast<long>(n)); }
inline Rational R(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long den) {
  long n = std::uniform_int_distribution<long>(lo * den, hi * den)(rng);
  return R(n, den);
}

inline LogInterval open_iv(const Rational& a, const Rational& b) { return LogInterval::open(a, b); }

inline Annulus annulus(const Rational& a, const Rational& b) { return Annulus(LogInterval::open(a, b)); }

inline Integer ipow(std::int64_t p, long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return out;
}

/// Random mu_p class with support in [-3, 3] on (-3, 0), dominant degree d0.
/// Non-dominant coefficients carry enough p-adic valuation to stay below the
/// dominant term across the whole interval.
inline LaurentExt random_class(std::mt19937_64& rng, std::int64_t p, std::int64_t d0) {
  std::map<std::int64_t, Rational> co;
  auto unit = [&] {
    long u;
    do {
      u = std::uniform_int_distribution<long>(-3 * p, 3 * p)(rng);
    } while (u == 0 || u % p == 0);
    long v;
    do {
      v = std::uniform_int_distribution<long>(1, 2 * p)(rng);
    } while (v % p == 0);
    return R(u, v);
  };
  co[d0] = unit();
  int extra = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int t = 0; t < extra; ++t) {
    std::int64_t k = std::uniform_int_distribution<int>(-3, 3)(rng);
    if (k == d0) continue;
    // need v_k - v_d0 > (k - d0) * lambda on the open interval (-3, 0):
    // k > d0 needs v >= 0, k < d0 needs v >= 3 (d0 - k)
    long base = k > d0 ? 0 : 3 * (d0 - k);
    long v = base + std::uniform_int_distribution<long>(0, 2)(rng);
    co[k] = unit() * Rational(ipow(p, v));
  }
  return LaurentExt::from_rationals(p, co);
}

}  // namespace testing_support
