#include "annulab/annuli.hpp"

#include "annulab/errors.hpp"

#include <stdexcept>

namespace annulab {

Annulus::Annulus(LogInterval I, int orient) : interval(std::move(I)), orientation(orient) {
  if (interval.is_empty()) throw std::invalid_argument("annulus with empty interval");
  if (orientation != 1 && orientation != -1) throw std::invalid_argument("orientation must be +1 or -1");
}

std::optional<Rational> length(const Annulus& A) { return A.interval.length(); }

namespace {

// Translate so that the lower endpoint (or, failing that, the upper one) is 0.
LogInterval anchored(const LogInterval& I) {
  if (I.lo()) return I.translate(-*I.lo());
  if (I.hi()) return I.translate(-*I.hi());
  return I;
}

}  // namespace

bool is_isomorphic(const Annulus& A, const Annulus& B) {
  LogInterval b = anchored(B.interval);
  return anchored(A.interval) == b || anchored(A.interval.reflect()) == b;
}

LogInterval skeleton_interval(const Annulus& A) { return A.interval; }

Rational midpoint(const Annulus& A) {
  if (!A.interval.is_bounded())
    throw DomainError(ErrorCode::MidpointOfInfinite, "annulus " + to_string(A.interval) + " has infinite length");
  return (*A.interval.lo() + *A.interval.hi()) / 2;
}

Rational distance(const Rational& a, const Rational& b) { return abs(a - b); }

Annulus kummer_pullback(const Annulus& A, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("kummer_pullback needs n >= 1");
  Rational f(1, static_cast<long>(n));
  return Annulus(A.interval.affine_image(f, Rational(0)), A.orientation);
}

}  // namespace annulab
