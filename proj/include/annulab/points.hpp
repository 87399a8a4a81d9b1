#pragma once

// Points eta_{z0,r} on the trunk [z0, r(z0)] of the analytic line, the
// pushforward under z -> z^p and fiber counts of z -> z^{p^h}.

#include "annulab/valnum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace annulab {

struct TrunkPoint {
  Rational center_mag;  // log_p |z0|
  Rational radius;      // log_p r, at most center_mag
  std::string center_tag;

  friend bool operator==(const TrunkPoint&, const TrunkPoint&) = default;
};

/// Image of eta_{z0,r} under z -> z^p. Throws InvalidPoint when r >= |z0|.
TrunkPoint push_p(const TrunkPoint& pt, std::int64_t p);

/// Cardinality of the fiber of z -> z^{p^h} over eta_{z0,r}, |z0| = p^m.
/// Zones: 1 on [m+tau, m), p^i on [m-i+tau, m-i+tau1), p^h below m-h+tau1.
Integer fiber_count(std::int64_t p, int h, const Rational& m, const Rational& r);

/// Same count obtained by inverting push_p one level at a time.
Integer fiber_count_recursive(std::int64_t p, int h, const Rational& m, const Rational& r);

struct FiberLevel {
  int level;             // 1..h, level k lives over z -> z^{p^k}'s source
  Rational center_mag;   // m / p^k
  Rational radius;       // radius of each preimage point at this level
  Rational separation;   // center_mag + tau1: conjugates are distinct below it
  bool distinct;
};

struct FiberRow {
  Rational radius;
  Integer count;
  std::vector<FiberLevel> levels;
};

/// One row per radius, sorted by radius descending (duplicates kept once).
std::vector<FiberRow> fiber_tree(std::int64_t p, int h, const Rational& m,
                                 const std::vector<Rational>& radii);

}  // namespace annulab
