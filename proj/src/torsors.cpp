#include "annulab/torsors.hpp"

#include "annulab/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace annulab {

namespace {

Rational q(long v) { return Rational(v); }

Thresholds require_mu_p(const TorsorClass& tc, std::int64_t p) {
  Thresholds th = Thresholds::for_prime(p);
  if (tc.n != p)
    throw DomainError(ErrorCode::ModulusMismatch,
                      "class modulus " + std::to_string(tc.n) + " is not p = " + std::to_string(p));
  return th;
}

Verdict make(VerdictKind k, std::string basis, UnknownReason r = UnknownReason::None) {
  Verdict v;
  v.kind = k;
  v.reason = r;
  v.basis = std::move(basis);
  return v;
}

ExtScalar one(std::int64_t p) { return ExtScalar::from_rational(p, Rational(1)); }

LaurentExt monomial_ext(const ExtScalar& c, std::int64_t k) {
  LaurentExt out(c.prime());
  out.add_term(k, c);
  return out;
}

// Lift a residue polynomial in t = T p^lambda back to coefficient level.
LaurentExt lift(const ResiduePoly& f, const Rational& lambda, const ExtScalar& scale) {
  const std::int64_t p = f.prime();
  LaurentExt out(p);
  for (const auto& [j, c] : f.coeffs())
    out.add_term(j, ExtScalar::monomial(p, Rational(static_cast<long>(c)),
                                        Rational(Rational(static_cast<long>(j)) * lambda)) *
                        scale);
  return out;
}

// Generalised binomial coefficient k(k-1)...(k-i+1)/i!.
Rational binomial(std::int64_t k, int i) {
  Rational out(1);
  for (int j = 0; j < i; ++j) out = out * Rational(static_cast<long>(k - j)) / Rational(j + 1);
  return out;
}

const LaurentExt& require_coefficients(const TorsorClass& tc) {
  if (!tc.coefficients)
    throw DomainError(ErrorCode::NormOnlyRepresentative, "deciding this point needs coefficient-level data");
  return *tc.coefficients;
}

}  // namespace

TorsorClass::TorsorClass(std::int64_t n_, NewtonData rep_, Annulus annulus_)
    : n(n_), rep(std::move(rep_)), annulus(std::move(annulus_)) {
  if (n < 2) throw std::invalid_argument("torsor modulus must be at least 2");
  degree_class(rep, annulus.interval);
}

TorsorClass::TorsorClass(std::int64_t n_, LaurentExt g, Annulus annulus_)
    : n(n_), rep(to_newton(g)), coefficients(std::move(g)), annulus(std::move(annulus_)) {
  if (n < 2) throw std::invalid_argument("torsor modulus must be at least 2");
  degree_class(rep, annulus.interval);
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Split: return "Split";
    case VerdictKind::NotSplit: return "NotSplit";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(UnknownReason r) {
  switch (r) {
    case UnknownReason::None: return "";
    case UnknownReason::WildBoundary: return "wild-boundary";
    case UnknownReason::NonIntegralRadius: return "non-integral-radius";
    case UnknownReason::IterationCap: return "iteration-cap";
  }
  return "?";
}

std::string to_string(TriState t) {
  switch (t) {
    case TriState::Yes: return "Yes";
    case TriState::No: return "No";
    case TriState::Unknown: return "Unknown";
  }
  return "?";
}

RigidPoint RigidPoint::at(std::int64_t p, const Rational& m, std::string tag) {
  return {ExtScalar::monomial(p, Rational(1), Rational(-m)), m, std::move(tag)};
}

RigidPoint RigidPoint::from_scalar(const ExtScalar& alpha, std::string tag) {
  if (alpha.parts().size() != 1) throw std::invalid_argument("rigid points need a single-term scalar");
  return {alpha, alpha.magnitude().value(), std::move(tag)};
}

RadiusBound RadiusBound::exactly(const Rational& r, std::string basis) {
  RadiusBound b;
  b.exact = r;
  b.lower = r;
  b.upper = r;
  b.basis = std::move(basis);
  return b;
}

std::int64_t cochain_value(const TorsorClass& tc) {
  return mod_n(degree_class(tc.rep, tc.annulus.interval) * tc.annulus.orientation, tc.n);
}

Verdict refine_verdict(const FuncRep& F, const Rational& lambda, std::int64_t p, int max_iter) {
  const Thresholds th = Thresholds::for_prime(p);
  LaurentExt num = F.num;
  LaurentExt den = F.den;
  for (int iter = 0;; ++iter) {
    LaurentExt diff = num - den;
    if (diff.is_zero()) {
      Verdict v = make(VerdictKind::Split, "exact");
      v.iterations = iter;
      return v;
    }
    LogMag L = func_eval_mag({diff, den}, lambda);
    if (L.value() >= 0) throw std::invalid_argument("representative is not of the form 1+u with |u| < 1");
    Verdict v;
    v.iterations = iter;
    v.last_mag = L;
    if (L.value() < th.tau) {
      v.kind = VerdictKind::Split;
      v.basis = iter ? "residue" : "norm-bound";
      return v;
    }
    if (L.value() == th.tau) {
      v.kind = VerdictKind::Unknown;
      v.reason = UnknownReason::WildBoundary;
      v.basis = "norm-bound";
      return v;
    }
    if (!is_integer(lambda)) {
      v.kind = VerdictKind::Unknown;
      v.reason = UnknownReason::NonIntegralRadius;
      v.basis = "norm-bound";
      return v;
    }
    if (iter >= max_iter) {
      v.kind = VerdictKind::Unknown;
      v.reason = UnknownReason::IterationCap;
      v.basis = "residue";
      return v;
    }
    ResidueFraction r = func_residue({diff, den}, lambda);
    auto root = is_pth_power(r);
    if (!root) {
      v.kind = VerdictKind::NotSplit;
      v.basis = "residue";
      v.certificate = r;
      return v;
    }
    // 1+u = (1+w)^p (1+u') with w = A/B lifted from the residue root
    ExtScalar scale = ExtScalar::monomial(p, Rational(1), Rational(-L.value() / Rational(static_cast<long>(p))));
    LaurentExt A = lift(root->num(), lambda, scale);
    LaurentExt B = lift(root->den(), lambda, one(p));
    num = num * pow(B, p);
    den = den * pow(B + A, p);
  }
}

Verdict split_verdict_at(const TorsorClass& tc, const Rational& lambda, std::int64_t p, int max_iter) {
  const Thresholds th = require_mu_p(tc, p);
  const LogInterval& I = tc.annulus.interval;
  if (!I.contains(lambda))
    throw DomainError(ErrorCode::OffAnnulus, to_string(lambda) + " is not in " + to_string(I));
  if (cochain_value(tc) != 0) return make(VerdictKind::NotSplit, "cochain");
  Normalized nz = normalize(tc.rep, I);
  if (nz.remainder.empty()) return make(VerdictKind::Split, "monomial");
  LogMag L = eval_at(nz.remainder, lambda);
  Verdict v;
  v.last_mag = L;
  v.basis = "norm-bound";
  if (L.value() < th.tau) {
    v.kind = VerdictKind::Split;
    return v;
  }
  if (L.value() == th.tau) {
    v.reason = UnknownReason::WildBoundary;
    return v;
  }
  if (!is_integer(lambda)) {
    v.reason = UnknownReason::NonIntegralRadius;
    return v;
  }
  if (!tc.coefficients) {
    // a single argmax term of degree prime to p has a non-p-th-power residue
    std::vector<std::int64_t> top;
    for (const auto& [j, c] : nz.remainder.terms())
      if (LogMag(Rational(c + Rational(static_cast<long>(j)) * lambda)) == L) top.push_back(j);
    if (top.size() == 1 && top[0] % p != 0) {
      v.kind = VerdictKind::NotSplit;
      v.basis = "dominant-monomial";
      return v;
    }
  }
  const LaurentExt& g = require_coefficients(tc);
  return refine_verdict({g, monomial_ext(g.coeff(nz.degree), nz.degree)}, lambda, p, max_iter);
}

namespace {

// g(t + alpha) * alpha^K / (g(alpha) (t + alpha)^K) as an exact quotient of polynomials in t.
FuncRep recentered_rep(const LaurentExt& g, const ExtScalar& alpha) {
  const std::int64_t p = g.prime();
  std::int64_t K = std::max<std::int64_t>(0, -g.min_degree());
  LaurentExt N = substitute_shift(g.shift(K), alpha);
  LaurentExt D = pow(LaurentExt::constant(alpha) + monomial_ext(one(p), 1), K);
  ExtScalar n0 = N.coeff(0);
  ExtScalar d0 = D.coeff(0);
  if (n0.is_zero()) throw std::invalid_argument("representative vanishes at the rigid point");
  return {N.scale(d0), D.scale(n0)};
}

}  // namespace

Verdict split_verdict_rigid(const TorsorClass& tc, const RigidPoint& alpha, const Rational& rho, std::int64_t p,
                            int max_iter) {
  const Thresholds th = require_mu_p(tc, p);
  const LogInterval& I = tc.annulus.interval;
  if (!I.contains(alpha.m))
    throw DomainError(ErrorCode::OffAnnulus, "rigid point magnitude " + to_string(alpha.m) + " not in " + to_string(I));
  if (rho >= alpha.m)
    throw DomainError(ErrorCode::InvalidPoint, "radius " + to_string(rho) + " must be below " + to_string(alpha.m));
  if (cochain_value(tc) != 0)
    return make(rho < alpha.m + th.tau ? VerdictKind::Split : VerdictKind::NotSplit, "cochain");
  Normalized nz = normalize(tc.rep, I);
  if (nz.remainder.empty()) return make(VerdictKind::Split, "monomial");
  if (!tc.coefficients) {
    Rational U = eval_at(nz.remainder, alpha.m).value();
    if (U + rho - alpha.m < th.tau) return make(VerdictKind::Split, "norm-bound");
  }
  const LaurentExt& g = require_coefficients(tc);
  return refine_verdict(recentered_rep(g, alpha.alpha), rho, p, max_iter);
}

Recentered recenter(const LaurentExt& g, const ExtScalar& alpha, int i_max) {
  if (i_max < 0) throw std::invalid_argument("i_max must be non-negative");
  const std::int64_t p = g.prime();
  Recentered out;
  for (int i = 0; i <= i_max; ++i) {
    ExtScalar Ai(p);
    for (const auto& [k, a] : g.coeffs()) {
      Rational b = binomial(k, i);
      if (b == 0) continue;
      Ai = Ai + a * ExtScalar::from_rational(p, b) * pow(alpha, k - i);
    }
    out.coeffs.push_back(Ai);
  }
  for (const auto& [k, a] : g.coeffs())
    if (k != 0) out.tail_base = logmag_umax(out.tail_base, (a * pow(alpha, k)).magnitude());
  return out;
}

RadiusBound split_radius_rigid(const TorsorClass& tc, const RigidPoint& alpha, std::int64_t p, int i_max,
                               int max_iter) {
  const Thresholds th = require_mu_p(tc, p);
  const LogInterval& I = tc.annulus.interval;
  const Rational& m = alpha.m;
  if (!I.contains(m))
    throw DomainError(ErrorCode::OffAnnulus, "rigid point magnitude " + to_string(m) + " not in " + to_string(I));
  if (cochain_value(tc) != 0) return RadiusBound::exactly(m + th.tau, "cochain");
  Normalized nz = normalize(tc.rep, I);
  if (nz.remainder.empty()) return RadiusBound::exactly(m, "monomial");

  RadiusBound rb;
  rb.upper = m;
  rb.lower = std::min(m, Rational(m + th.tau - eval_at(nz.remainder, m).value()));
  rb.basis = "norm-bound";
  if (tc.coefficients) {
    const LaurentExt& g = *tc.coefficients;
    Recentered rc = recenter(g, alpha.alpha, i_max);
    Rational a0 = rc.coeffs[0].magnitude().value();
    Rational coef = m;
    for (int i = 1; i <= i_max; ++i)
      if (!rc.coeffs[i].is_zero())
        coef = std::min(coef, Rational((th.tau - rc.coeffs[i].magnitude().value() + a0) / q(i)));
    bool has_tail = g.min_degree() < 0 || g.max_degree() > i_max;
    if (has_tail && !rc.tail_base.is_neg_inf())
      coef = std::min(coef, Rational(m + std::min(Rational(0), Rational((th.tau - rc.tail_base.value() + a0) / q(i_max + 1)))));
    Rational proof = m + th.tau / 2;
    if (i_max >= 1 && !rc.coeffs[1].is_zero())
      proof = std::min(proof, Rational(th.tau - rc.coeffs[1].magnitude().value() + a0));
    rb.proof_bound = proof;
    if (coef > rb.lower) {
      rb.lower = coef;
      rb.basis = "recentered";
    }
    if (proof > rb.lower) {
      rb.lower = proof;
      rb.basis = "proof-bound";
    }
    // a0 + a1 T up to a p-th power monomial: splits exactly while |a1 t| < |g(alpha)| p^tau
    const auto& cs = g.coeffs();
    if (cs.size() == 2 && cs.rbegin()->first == nz.degree + 1) {
      ExtScalar a1 = cs.rbegin()->second;
      ExtScalar value = cs.begin()->second + a1 * alpha.alpha;
      Rational r = std::min(m, Rational(value.magnitude().value() - a1.magnitude().value() + th.tau));
      RadiusBound ex = RadiusBound::exactly(r, "affine-factor");
      ex.proof_bound = rb.proof_bound;
      return ex;
    }
    // probes on the half-integer grid between the bounds
    Rational start = Rational(floor_of(rb.lower * 2) + 1) / 2;
    int budget = 24;
    for (Rational rho = start; rho < rb.upper && budget > 0; rho += Rational(1, 2), --budget) {
      Verdict v = split_verdict_rigid(tc, alpha, rho, p, max_iter);
      if (v.is(VerdictKind::Split)) {
        rb.lower = rho;
        rb.basis = "probe";
      } else if (v.is(VerdictKind::NotSplit)) {
        rb.upper = rho;
        break;
      }
    }
  }
  if (rb.lower == rb.upper) rb.exact = rb.lower;
  return rb;
}

Rational split_radius_power(std::int64_t p, int h, const Rational& m) {
  if (h < 1) throw std::invalid_argument("h must be positive");
  return m - q(h) + Thresholds::for_prime(p).tau1;
}

TrunkPoint threshold_point(const Annulus& A, std::int64_t p, const Rational& m, const std::string& tag) {
  const Thresholds th = Thresholds::for_prime(p);
  if (!A.interval.interior().contains(m))
    throw DomainError(ErrorCode::OffAnnulus, to_string(m) + " is not interior to " + to_string(A.interval));
  return {m, m + th.tau, tag};
}

ThresholdWitness witness_threshold_solvable(const SemiGraph& G, const std::string& edge, const Annulus& A,
                                            std::int64_t p, const Rational& m) {
  if (!eval_surjective(G, p, edge))
    throw DomainError(ErrorCode::BridgeEdge, "every harmonic mod-" + std::to_string(p) + " cochain vanishes on '" + edge + "'");
  std::int64_t value = 0;
  for (const auto& gen : harm_group(truncate(G), p).generators)
    if (gen.values.at(edge) != 0) {
      value = gen.values.at(edge);
      break;
    }
  TrunkPoint thr = threshold_point(A, p, m, "x_alpha");
  LaurentExt g = monomial_ext(one(p), value);
  ThresholdWitness w{TorsorClass(p, g, A), thr, value, {}, true};
  RigidPoint alpha = RigidPoint::at(p, m, "alpha");
  RadiusBound rb = split_radius_rigid(w.torsor, alpha, p);
  w.verified = rb.exact && *rb.exact == thr.radius;
  for (const Rational& rho : {Rational(thr.radius - 1), Rational(thr.radius - Rational(1, 2)), thr.radius,
                              Rational(thr.radius + Rational(1, 2))}) {
    if (rho >= m) continue;
    WitnessProbe pr{rho, split_verdict_rigid(w.torsor, alpha, rho, p), fiber_count(p, 1, m, rho)};
    bool split = pr.verdict.is(VerdictKind::Split);
    bool expect = rho < thr.radius;
    w.verified = w.verified && split == expect && (pr.fiber == p) == split;
    w.probes.push_back(std::move(pr));
  }
  return w;
}

SkeletonWitness witness_skeleton_solvable(const Rational& lambda, std::int64_t p) {
  const Thresholds th = Thresholds::for_prime(p);
  SkeletonWitness w;
  w.rescale = th.tau - lambda;
  w.delta = Rational(1, 2);
  w.count_at = fiber_count(p, 1, Rational(0), th.tau);
  w.count_below = fiber_count(p, 1, Rational(0), Rational(th.tau - w.delta));
  return w;
}

TriState h1_omega_member(const TorsorClass& tc, End omega, std::int64_t p) {
  const Thresholds th = require_mu_p(tc, p);
  const LogInterval& I = tc.annulus.interval;
  if (cochain_value(tc) != 0) return TriState::No;
  Normalized nz = normalize(tc.rep, I);
  const NewtonData& u = nz.remainder;
  if (u.empty()) return TriState::Yes;
  const bool hi = omega == End::Hi;
  const auto& w = hi ? I.hi() : I.lo();
  const bool w_closed = hi ? I.hi_closed() : I.lo_closed();

  LogInterval locus = split_locus(u, I, p);
  if (!locus.interior().is_empty()) {
    const auto& le = hi ? locus.hi() : locus.lo();
    bool le_closed = hi ? locus.hi_closed() : locus.lo_closed();
    if (le == w && le_closed == w_closed) return TriState::Yes;
  }

  // the term of u dominating just inside omega
  std::optional<std::int64_t> j;
  if (w) {
    LogMag top = eval_at(u, *w);
    for (const auto& [d, c] : u.terms())
      if (LogMag(Rational(c + q(d) * *w)) == top && (!j || (hi ? d < *j : d > *j))) j = d;
  } else {
    j = hi ? u.terms().rbegin()->first : u.terms().begin()->first;
  }
  if (*j % p == 0) return TriState::Unknown;
  const Rational cj = u.terms().at(*j);
  LogInterval near = I;
  for (const auto& [d, c] : u.terms()) {
    if (d == *j) continue;
    Rational b = (c - cj) / q(*j - d);  // c_j + j x > c_d + d x
    near = near.intersect(*j > d ? LogInterval::above(b, false) : LogInterval::below(b, false));
  }
  Rational b = (th.tau - cj) / q(*j);  // c_j + j x > tau
  near = near.intersect(*j > 0 ? LogInterval::above(b, false) : LogInterval::below(b, false));
  if (near.interior().is_empty()) return TriState::Unknown;
  if ((hi ? near.hi() : near.lo()) != w) return TriState::Unknown;

  // integer witness nearest to omega
  std::optional<Rational> x;
  if (hi) {
    Rational start = near.hi() ? Rational(floor_of(*near.hi())) : Rational(floor_of(*near.lo()) + 1);
    if (near.contains(start)) x = start;
    else if (near.contains(start - 1)) x = Rational(start - 1);
  } else {
    Rational start = near.lo() ? Rational(ceil_of(*near.lo())) : Rational(ceil_of(*near.hi()) - 1);
    if (near.contains(start)) x = start;
    else if (near.contains(start + 1)) x = Rational(start + 1);
  }
  if (!x) return TriState::Unknown;
  Verdict v = split_verdict_at(tc, *x, p);
  return v.is(VerdictKind::NotSplit) ? TriState::No : TriState::Unknown;
}

Rational probe_point(const Annulus& A) {
  const LogInterval& I = A.interval;
  if (I.lo() && I.hi()) {
    Rational mid = (*I.lo() + *I.hi()) / 2;
    Rational cand = Rational(floor_of(mid * 2 + Rational(1, 2))) / 2;
    if (I.interior().contains(cand)) return cand;
    return mid;
  }
  if (I.hi()) return *I.hi() - 1;
  if (I.lo()) return *I.lo() + 1;
  return Rational(0);
}

KernelReport kernel_test_annulus(const TorsorClass& tc, std::int64_t p) {
  const Thresholds th = require_mu_p(tc, p);
  KernelReport rep{cochain_value(tc) == 0, probe_point(tc.annulus), {}};
  rep.radius = split_radius_rigid(tc, RigidPoint::at(p, rep.probe_m, "probe"), p);
  Rational minimal = rep.probe_m + th.tau;
  bool consistent = rep.in_kernel ? rep.radius.lower > minimal : (rep.radius.exact && *rep.radius.exact == minimal);
  if (!consistent) throw std::logic_error("splitting radius contradicts the cochain value");
  return rep;
}

bool kernel_test_curve(const SemiGraph& G, const std::map<std::string, TorsorClass>& f,
                       const std::vector<std::map<std::string, TorsorClass>>& candidates, std::int64_t p) {
  const SemiGraph closed = truncate(G);
  for (const auto& e : closed.edges()) {
    if (is_bridge(G, e.name)) throw DomainError(ErrorCode::BridgeEdge, "edge '" + e.name + "' is a bridge");
    auto fe = f.find(e.name);
    if (fe == f.end()) throw DomainError(ErrorCode::MissingEdgeClass, "no class of f on edge '" + e.name + "'");
    RigidPoint alpha = RigidPoint::at(p, probe_point(fe->second.annulus), "probe-" + e.name);
    RadiusBound rf = split_radius_rigid(fe->second, alpha, p);
    bool found = false;
    for (const auto& cand : candidates) {
      auto ce = cand.find(e.name);
      if (ce == cand.end()) continue;
      RadiusBound rc = split_radius_rigid(ce->second, alpha, p);
      if (rc.upper < rf.lower) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace annulab
