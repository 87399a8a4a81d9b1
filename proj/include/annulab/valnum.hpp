#pragma once

// Exact log_p-scale magnitudes, radii and intervals.
//
// A magnitude |x| is stored as L = log_p |x|, so |x| = p^L and |p| = p^-1.
// Every quantity in the library is piecewise affine in this scale with
// rational breakpoints, so plain rationals suffice.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace annulab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a/b", "a" or "-a/b" into canonical form. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
bool is_prime(std::int64_t n);

/// p-adic valuation of a nonzero integer / rational.
std::int64_t valuation_p(const Integer& z, std::int64_t p);
std::int64_t valuation_p(const Rational& q, std::int64_t p);

/// log_p of a magnitude, or NEG_INF for the magnitude of zero.
class LogMag {
 public:
  LogMag() = default;  // NEG_INF
  LogMag(Rational value) : value_(std::move(value)) { value_->canonicalize(); }
  LogMag(std::int64_t value) : value_(Rational(static_cast<long>(value))) {}

  static LogMag neg_inf() { return {}; }

  bool is_neg_inf() const { return !value_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const LogMag& a, const LogMag& b);
  friend bool operator<(const LogMag& a, const LogMag& b);
  friend bool operator<=(const LogMag& a, const LogMag& b) { return !(b < a); }
  friend bool operator>(const LogMag& a, const LogMag& b) { return b < a; }
  friend bool operator>=(const LogMag& a, const LogMag& b) { return !(a < b); }

 private:
  std::optional<Rational> value_;
};

/// |ab| = |a||b|.
LogMag logmag_mul(const LogMag& a, const LogMag& b);
/// Ultrametric bound max(|a|, |b|).
LogMag logmag_umax(const LogMag& a, const LogMag& b);

std::string to_string(const LogMag& m);
std::ostream& operator<<(std::ostream& os, const LogMag& m);

/// Interval of log-radii with open/closed flags. A missing endpoint is
/// infinite (and always open). The empty interval is canonically (0, 0).
class LogInterval {
 public:
  /// Validating constructor: requires lo <= hi. Infinite endpoints are
  /// forced open; degenerate intervals that are not closed on both sides
  /// collapse to the canonical empty interval.
  LogInterval(std::optional<Rational> lo, bool lo_closed, std::optional<Rational> hi,
              bool hi_closed);

  static LogInterval open(Rational lo, Rational hi);
  static LogInterval closed(Rational lo, Rational hi);
  static LogInterval point(Rational x);
  static LogInterval whole();
  static LogInterval empty();
  static LogInterval below(Rational hi, bool closed);
  static LogInterval above(Rational lo, bool closed);

  const std::optional<Rational>& lo() const { return lo_; }
  const std::optional<Rational>& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }

  bool is_empty() const;
  bool is_point() const;
  bool is_bounded() const { return lo_ && hi_; }
  bool contains(const Rational& x) const;
  /// hi - lo; std::nullopt stands for +infinity.
  std::optional<Rational> length() const;

  LogInterval translate(const Rational& shift) const;
  /// (lo, hi) -> (-hi, -lo) with the flags swapped.
  LogInterval reflect() const;
  /// Image under x -> factor * x + offset; a negative factor reflects.
  LogInterval affine_image(const Rational& factor, const Rational& offset) const;
  LogInterval intersect(const LogInterval& other) const;
  LogInterval interior() const;

  friend bool operator==(const LogInterval& a, const LogInterval& b);
  friend bool operator!=(const LogInterval& a, const LogInterval& b) { return !(a == b); }

 private:
  LogInterval() = default;

  std::optional<Rational> lo_;
  std::optional<Rational> hi_;
  bool lo_closed_ = false;
  bool hi_closed_ = false;
};

std::string to_string(const LogInterval& interval);
std::ostream& operator<<(std::ostream& os, const LogInterval& interval);

/// The constants attached to a residue characteristic p:
///   tau  = -p/(p-1)   (log of the wild splitting threshold p^{-p/(p-1)})
///   tau1 = -1/(p-1)   (log of the distance between distinct p-th roots of unity)
///   c    =  p/(p-1)
struct Thresholds {
  std::int64_t p = 2;
  Rational tau;
  Rational tau1;
  Rational c;

  /// Throws std::invalid_argument when p is not prime.
  static Thresholds for_prime(std::int64_t p);
};

/// log_p |xi - xi'| for distinct p-th roots of unity.
LogMag root_separation(std::int64_t p);

}  // namespace annulab
