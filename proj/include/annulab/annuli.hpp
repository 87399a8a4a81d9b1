#pragma once

// Annuli C_I = {|T| in I} in log coordinates.

#include "annulab/valnum.hpp"

#include <cstdint>
#include <optional>

namespace annulab {

struct Annulus {
  LogInterval interval;
  int orientation = 1;  // +1 or -1

  /// Throws std::invalid_argument on an empty interval or bad orientation.
  explicit Annulus(LogInterval I, int orientation = 1);
};

/// hi - lo, std::nullopt for an infinite length.
std::optional<Rational> length(const Annulus& A);

/// Isomorphic iff the intervals agree up to translation and reflection.
bool is_isomorphic(const Annulus& A, const Annulus& B);

LogInterval skeleton_interval(const Annulus& A);
/// Throws MidpointOfInfinite.
Rational midpoint(const Annulus& A);
Rational distance(const Rational& a, const Rational& b);

/// The annulus upstairs of the Kummer torsor T -> T^n (interval scaled by 1/n).
Annulus kummer_pullback(const Annulus& A, std::int64_t n);

}  // namespace annulab
