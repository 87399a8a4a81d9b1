#pragma once

// Length thresholds N*p/(p-1) < l, threshold profiles and localization.

#include "annulab/annuli.hpp"
#include "annulab/newton.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace annulab {

/// std::nullopt stands for an infinite length.
using Length = std::optional<Rational>;

std::string to_string(const Length& l);

struct GtCReport {
  bool result;
  LogInterval zone;         // common split zone on the interval normalized to hi = 0
  bool witness_agrees;      // zone recomputed from the extremal converse class
};

/// l(A) > p/(p-1).
GtCReport detect_gt_c(const Annulus& A, std::int64_t p);

struct GtTwoCReport {
  bool result;
  LogInterval extremal_locus;
  std::size_t sampled;      // valid sample classes checked
  bool samples_split;       // every valid sample has a nonempty split locus
};

/// l(A) > 2p/(p-1). An empty sample uses a built-in family of trivial-cochain classes.
GtTwoCReport detect_gt_2c(const Annulus& A, std::int64_t p, const std::vector<NewtonData>& sample = {});

struct ThresholdProfile {
  std::int64_t p;
  Rational c;
  std::int64_t n_max;
  std::map<std::int64_t, bool> passed;  // N prime to p -> N*c < l

  friend bool operator==(const ThresholdProfile& a, const ThresholdProfile& b) {
    return a.p == b.p && a.n_max == b.n_max && a.passed == b.passed;
  }
};

ThresholdProfile profile_direct(const Length& l, std::int64_t p, std::int64_t n_max);
ThresholdProfile profile_from_torsors(const Annulus& A, std::int64_t p, std::int64_t n_max);

struct Localization {
  Rational lo;
  Length hi;
  bool saturated;

  bool contains(const Length& l) const;
  Length width() const;
};

/// Throws NonMonotoneProfile.
Localization localize(const ThresholdProfile& profile);

/// Distance from l to the nearest positive multiple of p.
Rational distance_to_p_multiples(const Rational& l, std::int64_t p);

struct PairReport {
  Length l1, l2;
  bool profiles_equal;
  std::optional<std::int64_t> first_difference;
  Length delta;
  bool bound_ok;  // |l1 - l2| < 2c whenever the profiles agree
  std::optional<Rational> d1, d2;
  std::vector<std::string> findings;
};

PairReport pair_report(const Length& l1, const Length& l2, std::int64_t p, std::int64_t n_max);

}  // namespace annulab
