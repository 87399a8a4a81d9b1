#include "annulab/lengthlab.hpp"

#include "annulab/errors.hpp"

#include <stdexcept>

namespace annulab {

std::string to_string(const Length& l) { return l ? to_string(*l) : "inf"; }

namespace {

// Translate (and reflect when only the lower end is finite) so that hi = 0.
LogInterval normalized(const LogInterval& I) {
  if (I.hi()) return I.translate(-*I.hi());
  if (I.lo()) return I.reflect().translate(*I.lo());
  return I;
}

void require_n_max(std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
}

}  // namespace

GtCReport detect_gt_c(const Annulus& A, std::int64_t p) {
  const Thresholds th = Thresholds::for_prime(p);
  LogInterval I = normalized(A.interval);
  if (!I.hi()) return {true, LogInterval::whole(), true};
  GtCReport r{false, LogInterval::empty(), true};
  if (!I.lo() || *I.lo() < th.tau) r.zone = LogInterval(I.lo(), false, th.tau, false);
  r.result = !r.zone.is_empty();
  // the converse class u = T is in H^1 of the lower end and splits exactly below tau
  LogInterval open = I.interior();
  if (!open.is_empty()) {
    LogInterval locus = split_locus(NewtonData{{1, Rational(0)}}, open, p);
    r.witness_agrees = locus == r.zone;
  }
  return r;
}

GtTwoCReport detect_gt_2c(const Annulus& A, std::int64_t p, const std::vector<NewtonData>& sample) {
  LogInterval I = normalized(A.interval);
  GtTwoCReport r{false, LogInterval::empty(), 0, true};
  if (!I.hi()) {
    r.result = true;
    r.extremal_locus = LogInterval::whole();
    return r;
  }
  LogInterval open = I.interior();
  NewtonData extremal{{1, Rational(0)}};
  if (I.lo()) extremal.set(-1, *I.lo());
  if (!open.is_empty()) r.extremal_locus = split_locus(extremal, open, p);

  std::vector<NewtonData> family = sample;
  if (family.empty() && I.lo()) {
    const Rational& lo = *I.lo();
    family = {
        NewtonData{{1, Rational(0)}},
        NewtonData{{-1, lo}},
        NewtonData{{1, Rational(-1, 2)}, {-1, Rational(lo - Rational(1, 2))}},
        NewtonData{{2, Rational(0)}, {-2, Rational(2 * lo)}},
        NewtonData{{static_cast<std::int64_t>(p), Rational(0)}, {-1, lo}},
    };
  }
  for (const auto& u : family) {
    NewtonData full = u;
    if (u.terms().count(0)) continue;
    full.set(0, Rational(0));
    if (open.is_empty() || dominant_degree(full, open) != std::optional<std::int64_t>(0)) continue;
    ++r.sampled;
    if (split_locus(u, open, p).interior().is_empty()) r.samples_split = false;
  }
  r.result = !r.extremal_locus.interior().is_empty() && r.samples_split;
  return r;
}

ThresholdProfile profile_direct(const Length& l, std::int64_t p, std::int64_t n_max) {
  const Thresholds th = Thresholds::for_prime(p);
  require_n_max(n_max);
  ThresholdProfile prof{p, th.c, n_max, {}};
  for (std::int64_t N = 1; N <= n_max; ++N)
    if (N % p != 0) prof.passed[N] = !l || Rational(static_cast<long>(N)) * th.c < *l;
  return prof;
}

ThresholdProfile profile_from_torsors(const Annulus& A, std::int64_t p, std::int64_t n_max) {
  const Thresholds th = Thresholds::for_prime(p);
  require_n_max(n_max);
  ThresholdProfile prof{p, th.c, n_max, {}};
  for (std::int64_t N = 1; N <= n_max; ++N)
    if (N % p != 0) prof.passed[N] = detect_gt_c(kummer_pullback(A, N), p).result;
  return prof;
}

bool Localization::contains(const Length& l) const {
  if (!l) return saturated;
  return *l > lo && (!hi || *l <= *hi);
}

Length Localization::width() const {
  if (!hi) return std::nullopt;
  return Rational(*hi - lo);
}

Localization localize(const ThresholdProfile& profile) {
  std::optional<std::int64_t> last_passed, first_failed;
  for (const auto& [N, ok] : profile.passed) {
    if (ok) {
      if (first_failed)
        throw DomainError(ErrorCode::NonMonotoneProfile,
                          "N=" + std::to_string(N) + " passes after N=" + std::to_string(*first_failed) + " failed");
      last_passed = N;
    } else if (!first_failed) {
      first_failed = N;
    }
  }
  Localization loc;
  loc.lo = last_passed ? Rational(profile.c * static_cast<long>(*last_passed)) : Rational(0);
  if (first_failed) loc.hi = Rational(profile.c * static_cast<long>(*first_failed));
  loc.saturated = !first_failed;
  return loc;
}

Rational distance_to_p_multiples(const Rational& l, std::int64_t p) {
  Rational pp(static_cast<long>(p));
  Rational k = Rational(floor_of(l / pp));
  Rational below = k * pp;
  Rational above = below + pp;
  if (below < pp) return abs(above - l);
  return std::min(abs(l - below), abs(above - l));
}

PairReport pair_report(const Length& l1, const Length& l2, std::int64_t p, std::int64_t n_max) {
  const Thresholds th = Thresholds::for_prime(p);
  ThresholdProfile a = profile_direct(l1, p, n_max);
  ThresholdProfile b = profile_direct(l2, p, n_max);
  PairReport r;
  r.l1 = l1;
  r.l2 = l2;
  r.profiles_equal = a == b;
  for (const auto& [N, ok] : a.passed)
    if (b.passed.at(N) != ok) {
      r.first_difference = N;
      break;
    }
  if (l1 && l2) r.delta = Rational(abs(*l1 - *l2));
  r.bound_ok = true;
  if (r.profiles_equal) {
    if (!l1 != !l2) {
      const Rational& finite = l1 ? *l1 : *l2;
      std::int64_t top = n_max;
      while (top % p == 0) --top;
      if (finite <= th.c * static_cast<long>(top)) {
        r.bound_ok = false;
        r.findings.push_back("finite and infinite lengths share a profile below the truncation level");
      } else {
        r.findings.push_back("finite length " + to_string(finite) + " beyond the truncation level c*n_max");
      }
    }
    if (r.delta && *r.delta >= 2 * th.c) {
      if (localize(a).saturated) {
        r.findings.push_back("both lengths beyond the truncation level c*n_max");
      } else {
        r.bound_ok = false;
        r.findings.push_back("|l1 - l2| = " + to_string(*r.delta) + " is not below 2c");
      }
    }
  }
  if (l1) r.d1 = distance_to_p_multiples(*l1, p);
  if (l2) r.d2 = distance_to_p_multiples(*l2, p);
  if (r.profiles_equal && r.d1 && r.d2 && *r.d1 > 1 && *r.d2 > 1 && r.delta && *r.delta >= th.c)
    r.findings.push_back("d(l, pN) > 1 on both sides but |l1 - l2| = " + to_string(*r.delta) + " is not below c");
  return r;
}

}  // namespace annulab
