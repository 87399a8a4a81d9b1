#pragma once

// mu_n torsor classes on annuli: cochain values, splitting verdicts,
// splitting radii at rigid points, kernel tests and solvability witnesses.

#include "annulab/annuli.hpp"
#include "annulab/cochains.hpp"
#include "annulab/newton.hpp"
#include "annulab/points.hpp"
#include "annulab/residues.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace annulab {

/// Class of a Kummer representative g in O(C)^x / (O(C)^x)^n.
struct TorsorClass {
  std::int64_t n;
  NewtonData rep;
  std::optional<LaurentExt> coefficients;
  Annulus annulus;

  /// Norm-only class. Throws NotInvertible when rep has no dominant monomial.
  TorsorClass(std::int64_t n, NewtonData rep, Annulus annulus);
  /// Coefficient-level class; rep is derived from the coefficients.
  TorsorClass(std::int64_t n, LaurentExt g, Annulus annulus);
};

enum class VerdictKind { Split, NotSplit, Unknown };
enum class UnknownReason { None, WildBoundary, NonIntegralRadius, IterationCap };

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  UnknownReason reason = UnknownReason::None;
  std::string basis;  // cochain | monomial | norm-bound | exact | residue
  int iterations = 0;
  std::optional<LogMag> last_mag;                 // log |u| at the point when refined
  std::optional<ResidueFraction> certificate;     // non-p-th-power residue for NotSplit

  bool is(VerdictKind k) const { return kind == k; }
};

std::string to_string(VerdictKind k);
std::string to_string(UnknownReason r);

/// log_p |alpha| = m; alpha is a single-term scalar.
struct RigidPoint {
  ExtScalar alpha;
  Rational m;
  std::string tag;

  static RigidPoint at(std::int64_t p, const Rational& m, std::string tag = "alpha");
  static RigidPoint from_scalar(const ExtScalar& alpha, std::string tag = "alpha");
};

struct RadiusBound {
  std::optional<Rational> exact;
  Rational lower;
  Rational upper;
  std::optional<Rational> proof_bound;  // min(tau - |A1| + |A0|, m + tau/2) when computed
  std::string basis;

  static RadiusBound exactly(const Rational& r, std::string basis);
};

constexpr int kDefaultMaxIter = 6;
constexpr int kDefaultIMax = 8;

/// Degree class mod n, signed by the annulus orientation.
std::int64_t cochain_value(const TorsorClass& tc);

/// Splitting verdict at the skeleton point eta_{0,p^lambda} for 1+u = F.num/F.den.
Verdict refine_verdict(const FuncRep& F, const Rational& lambda, std::int64_t p, int max_iter);

/// Throws ModulusMismatch (n != p), OffAnnulus, NormOnlyRepresentative.
Verdict split_verdict_at(const TorsorClass& tc, const Rational& lambda, std::int64_t p,
                         int max_iter = kDefaultMaxIter);

/// Verdict at eta_{alpha,p^rho}, rho < m.
Verdict split_verdict_rigid(const TorsorClass& tc, const RigidPoint& alpha, const Rational& rho,
                            std::int64_t p, int max_iter = kDefaultMaxIter);

struct Recentered {
  std::vector<ExtScalar> coeffs;  // A_0 .. A_{i_max}
  LogMag tail_base;               // max_{k != 0} log |a_k alpha^k|; |A_i| <= tail_base - i*m
};

Recentered recenter(const LaurentExt& g, const ExtScalar& alpha, int i_max);

RadiusBound split_radius_rigid(const TorsorClass& tc, const RigidPoint& alpha, std::int64_t p,
                               int i_max = kDefaultIMax, int max_iter = kDefaultMaxIter);

/// m - h + tau1 for a mu_{p^h} class with cochain prime to p.
Rational split_radius_power(std::int64_t p, int h, const Rational& m);

/// Point at distance p/(p-1) below r(alpha). Throws OffAnnulus.
TrunkPoint threshold_point(const Annulus& A, std::int64_t p, const Rational& m, const std::string& tag);

struct WitnessProbe {
  Rational radius;
  Verdict verdict;
  Integer fiber;
};

struct ThresholdWitness {
  TorsorClass torsor;
  TrunkPoint threshold;
  std::int64_t edge_value;
  std::vector<WitnessProbe> probes;
  bool verified;
};

/// Throws BridgeEdge when every harmonic mod-p cochain vanishes on the edge.
ThresholdWitness witness_threshold_solvable(const SemiGraph& G, const std::string& edge, const Annulus& A,
                                            std::int64_t p, const Rational& m);

struct SkeletonWitness {
  Rational rescale;  // tau - lambda
  Rational delta;
  Integer count_at;
  Integer count_below;
};

SkeletonWitness witness_skeleton_solvable(const Rational& lambda, std::int64_t p);

enum class End { Lo, Hi };
enum class TriState { Yes, No, Unknown };
std::string to_string(TriState t);

TriState h1_omega_member(const TorsorClass& tc, End omega, std::int64_t p);

struct KernelReport {
  bool in_kernel;
  Rational probe_m;
  RadiusBound radius;
};

/// Default rigid probe: midpoint rounded to the nearest 1/2 when interior.
Rational probe_point(const Annulus& A);
KernelReport kernel_test_annulus(const TorsorClass& tc, std::int64_t p);

/// f in ker(theta) iff each closed edge has a candidate f_e with a point in
/// D(f) \ D(f_e) over a shared rigid probe. Throws BridgeEdge, MissingEdgeClass.
bool kernel_test_curve(const SemiGraph& G, const std::map<std::string, TorsorClass>& f,
                       const std::vector<std::map<std::string, TorsorClass>>& candidates, std::int64_t p);

}  // namespace annulab
