#include "annulab/valnum.hpp"

#include "annulab/errors.hpp"

#include <stdexcept>

namespace annulab {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::ZeroDegree: return "ZeroDegree";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::MidpointOfInfinite: return "MidpointOfInfinite";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotHarmonic: return "NotHarmonic";
    case ErrorCode::ResidueOfZero: return "ResidueOfZero";
    case ErrorCode::NonIntegralRadius: return "NonIntegralRadius";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::DenominatorResidueZero: return "DenominatorResidueZero";
    case ErrorCode::NormOnlyRepresentative: return "NormOnlyRepresentative";
    case ErrorCode::OffAnnulus: return "OffAnnulus";
    case ErrorCode::BridgeEdge: return "BridgeEdge";
    case ErrorCode::MissingEdgeClass: return "MissingEdgeClass";
    case ErrorCode::NonMonotoneProfile: return "NonMonotoneProfile";
  }
  return "UnknownError";
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  auto digits_ok = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t valuation_p(const Integer& z, std::int64_t p) {
  if (z == 0) throw std::invalid_argument("valuation of zero");
  Integer a = abs(z);
  Integer pp(static_cast<long>(p));
  std::int64_t v = 0;
  while (a % pp == 0) {
    a /= pp;
    ++v;
  }
  return v;
}

std::int64_t valuation_p(const Rational& q, std::int64_t p) {
  return valuation_p(q.get_num(), p) - valuation_p(q.get_den(), p);
}

const Rational& LogMag::value() const {
  if (!value_) throw std::logic_error("value() of NEG_INF");
  return *value_;
}

bool operator==(const LogMag& a, const LogMag& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return a.is_neg_inf() == b.is_neg_inf();
  return a.value() == b.value();
}

bool operator<(const LogMag& a, const LogMag& b) {
  if (b.is_neg_inf()) return false;
  if (a.is_neg_inf()) return true;
  return a.value() < b.value();
}

LogMag logmag_mul(const LogMag& a, const LogMag& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return LogMag::neg_inf();
  return LogMag(Rational(a.value() + b.value()));
}

LogMag logmag_umax(const LogMag& a, const LogMag& b) { return a < b ? b : a; }

std::string to_string(const LogMag& m) { return m.is_neg_inf() ? "-inf" : to_string(m.value()); }

std::ostream& operator<<(std::ostream& os, const LogMag& m) { return os << to_string(m); }

LogInterval::LogInterval(std::optional<Rational> lo, bool lo_closed, std::optional<Rational> hi,
                         bool hi_closed)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_closed), hi_closed_(hi_closed) {
  if (!lo_) lo_closed_ = false;
  if (!hi_) hi_closed_ = false;
  if (lo_ && hi_) {
    if (*lo_ > *hi_) throw std::invalid_argument("interval with lo > hi");
    if (*lo_ == *hi_ && !(lo_closed_ && hi_closed_)) *this = empty();
  }
}

LogInterval LogInterval::open(Rational lo, Rational hi) { return {lo, false, hi, false}; }
LogInterval LogInterval::closed(Rational lo, Rational hi) { return {lo, true, hi, true}; }
LogInterval LogInterval::point(Rational x) { return {x, true, x, true}; }
LogInterval LogInterval::whole() { return {std::nullopt, false, std::nullopt, false}; }

LogInterval LogInterval::empty() {
  LogInterval e;
  e.lo_ = Rational(0);
  e.hi_ = Rational(0);
  return e;
}

LogInterval LogInterval::below(Rational hi, bool closed) { return {std::nullopt, false, hi, closed}; }
LogInterval LogInterval::above(Rational lo, bool closed) { return {lo, closed, std::nullopt, false}; }

bool LogInterval::is_empty() const {
  return lo_ && hi_ && *lo_ == *hi_ && !(lo_closed_ && hi_closed_);
}

bool LogInterval::is_point() const { return lo_ && hi_ && *lo_ == *hi_ && lo_closed_ && hi_closed_; }

bool LogInterval::contains(const Rational& x) const {
  if (is_empty()) return false;
  if (lo_ && (x < *lo_ || (x == *lo_ && !lo_closed_))) return false;
  if (hi_ && (x > *hi_ || (x == *hi_ && !hi_closed_))) return false;
  return true;
}

std::optional<Rational> LogInterval::length() const {
  if (!lo_ || !hi_) return std::nullopt;
  return Rational(*hi_ - *lo_);
}

LogInterval LogInterval::translate(const Rational& shift) const {
  if (is_empty()) return *this;
  auto mv = [&](const std::optional<Rational>& e) -> std::optional<Rational> {
    if (!e) return std::nullopt;
    return Rational(*e + shift);
  };
  return {mv(lo_), lo_closed_, mv(hi_), hi_closed_};
}

LogInterval LogInterval::reflect() const {
  if (is_empty()) return *this;
  auto neg = [](const std::optional<Rational>& e) -> std::optional<Rational> {
    if (!e) return std::nullopt;
    return Rational(-*e);
  };
  return {neg(hi_), hi_closed_, neg(lo_), lo_closed_};
}

LogInterval LogInterval::affine_image(const Rational& factor, const Rational& offset) const {
  if (factor == 0) throw std::invalid_argument("affine_image with zero factor");
  if (is_empty()) return *this;
  auto img = [&](const std::optional<Rational>& e) -> std::optional<Rational> {
    if (!e) return std::nullopt;
    return Rational(*e * abs(factor));
  };
  LogInterval scaled{img(lo_), lo_closed_, img(hi_), hi_closed_};
  if (factor < 0) scaled = scaled.reflect();
  return scaled.translate(offset);
}

LogInterval LogInterval::intersect(const LogInterval& other) const {
  if (is_empty() || other.is_empty()) return empty();
  std::optional<Rational> lo = lo_;
  bool lc = lo_closed_;
  if (other.lo_) {
    if (!lo || *other.lo_ > *lo) {
      lo = other.lo_;
      lc = other.lo_closed_;
    } else if (*other.lo_ == *lo) {
      lc = lc && other.lo_closed_;
    }
  }
  std::optional<Rational> hi = hi_;
  bool hc = hi_closed_;
  if (other.hi_) {
    if (!hi || *other.hi_ < *hi) {
      hi = other.hi_;
      hc = other.hi_closed_;
    } else if (*other.hi_ == *hi) {
      hc = hc && other.hi_closed_;
    }
  }
  if (lo && hi && *lo > *hi) return empty();
  return {lo, lc, hi, hc};
}

LogInterval LogInterval::interior() const {
  if (is_empty() || is_point()) return empty();
  return {lo_, false, hi_, false};
}

bool operator==(const LogInterval& a, const LogInterval& b) {
  if (a.is_empty() || b.is_empty()) return a.is_empty() == b.is_empty();
  return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.lo_closed_ == b.lo_closed_ &&
         a.hi_closed_ == b.hi_closed_;
}

std::string to_string(const LogInterval& interval) {
  if (interval.is_empty()) return "{}";
  std::string s = interval.lo_closed() ? "[" : "(";
  s += interval.lo() ? to_string(*interval.lo()) : "-inf";
  s += ", ";
  s += interval.hi() ? to_string(*interval.hi()) : "inf";
  s += interval.hi_closed() ? "]" : ")";
  return s;
}

std::ostream& operator<<(std::ostream& os, const LogInterval& interval) {
  return os << to_string(interval);
}

Thresholds Thresholds::for_prime(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  Thresholds t;
  t.p = p;
  t.c = Rational(static_cast<long>(p), static_cast<long>(p - 1));
  t.c.canonicalize();
  t.tau = -t.c;
  t.tau1 = Rational(-1, static_cast<long>(p - 1));
  t.tau1.canonicalize();
  return t;
}

LogMag root_separation(std::int64_t p) { return LogMag(Thresholds::for_prime(p).tau1); }

}  // namespace annulab
