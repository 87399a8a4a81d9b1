#include "annulab/newton.hpp"

#include "annulab/errors.hpp"

#include <stdexcept>

namespace annulab {

NewtonData::NewtonData(std::initializer_list<std::pair<const std::int64_t, Rational>> terms) {
  for (const auto& [d, c] : terms) set(d, c);
}

NewtonData::NewtonData(std::map<std::int64_t, Rational> terms) {
  for (auto& [d, c] : terms) set(d, c);
}

void NewtonData::set(std::int64_t degree, Rational log_mag) {
  log_mag.canonicalize();
  terms_[degree] = std::move(log_mag);
}

LogMag eval_at(const NewtonData& nd, const Rational& lambda) {
  LogMag best;
  for (const auto& [i, c] : nd.terms())
    best = logmag_umax(best, LogMag(Rational(c + Rational(static_cast<long>(i)) * lambda)));
  return best;
}

namespace {

// Is d(x) = a + s*x strictly positive on all of I? s != 0.
bool positive_on(const Rational& a, const Rational& s, const LogInterval& I) {
  const bool increasing = s > 0;
  const auto& end = increasing ? I.lo() : I.hi();
  bool closed = increasing ? I.lo_closed() : I.hi_closed();
  if (!end) return false;
  Rational v = a + s * *end;
  return closed ? v > 0 : v >= 0;
}

}  // namespace

std::optional<std::int64_t> dominant_degree(const NewtonData& nd, const LogInterval& I) {
  if (I.is_empty()) throw std::invalid_argument("dominant_degree on empty interval");
  if (nd.empty()) return std::nullopt;
  for (const auto& [i0, c0] : nd.terms()) {
    bool ok = true;
    for (const auto& [j, cj] : nd.terms()) {
      if (j == i0) continue;
      if (!positive_on(Rational(c0 - cj), Rational(static_cast<long>(i0 - j)), I)) {
        ok = false;
        break;
      }
    }
    if (ok) return i0;
  }
  return std::nullopt;
}

bool is_invertible(const NewtonData& nd, const LogInterval& I) {
  return dominant_degree(nd, I).has_value();
}

bool is_coordinate(const NewtonData& nd, const LogInterval& I) {
  auto d = dominant_degree(nd, I);
  return d && (*d == 1 || *d == -1);
}

std::int64_t degree_class(const NewtonData& nd, const LogInterval& I) {
  auto d = dominant_degree(nd, I);
  if (!d) throw DomainError(ErrorCode::NotInvertible, "no strictly dominant monomial on " + to_string(I));
  return *d;
}

Normalized normalize(const NewtonData& nd, const LogInterval& I) {
  std::int64_t i0 = degree_class(nd, I);
  Normalized out;
  out.degree = i0;
  out.coeff = nd.terms().at(i0);
  for (const auto& [i, c] : nd.terms())
    if (i != i0) out.remainder.set(i - i0, Rational(c - out.coeff));
  return out;
}

NewtonData recombine(const Normalized& n) {
  NewtonData nd;
  nd.set(n.degree, n.coeff);
  for (const auto& [j, c] : n.remainder.terms()) nd.set(n.degree + j, Rational(c + n.coeff));
  return nd;
}

LogInterval split_locus(const NewtonData& u, const LogInterval& I, std::int64_t p) {
  const Thresholds th = Thresholds::for_prime(p);
  if (I.is_empty()) return I;
  if (!u.empty()) {
    NewtonData one_plus_u = u;
    if (u.terms().count(0)) throw std::invalid_argument("normalized remainder has a degree-0 term");
    one_plus_u.set(0, Rational(0));
    if (dominant_degree(one_plus_u, I) != std::optional<std::int64_t>(0))
      throw std::invalid_argument("split_locus needs |u| < 1 on the interval");
  }
  LogInterval out = I;
  for (const auto& [j, c] : u.terms()) {
    Rational bound = (th.tau - c) / Rational(static_cast<long>(j));
    if (j > 0)
      out = out.intersect(LogInterval::below(bound, false));
    else
      out = out.intersect(LogInterval::above(bound, false));
  }
  return out;
}

ImageInterval image_interval(const NewtonData& nd, const LogInterval& I) {
  Normalized n = normalize(nd, I);
  if (n.degree == 0) throw DomainError(ErrorCode::ZeroDegree, "dominant degree 0 has no image interval");
  return {I.affine_image(Rational(static_cast<long>(n.degree)), n.coeff),
          n.degree < 0 ? -n.degree : n.degree};
}

}  // namespace annulab
