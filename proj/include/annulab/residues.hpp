#pragma once

// Exact coefficients q * p^s (s rational), Laurent polynomials over them and
// their residues over the field with p elements.

#include "annulab/newton.hpp"
#include "annulab/valnum.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace annulab {

/// A finite sum of terms q * p^s. Stored as fractional class f in [0, 1) ->
/// rational R, meaning sum_f R_f * p^f; distinct classes are linearly
/// independent over Q, so this form is canonical.
class ExtScalar {
 public:
  explicit ExtScalar(std::int64_t p = 2);
  static ExtScalar from_rational(std::int64_t p, const Rational& q);
  /// q * p^s.
  static ExtScalar monomial(std::int64_t p, const Rational& q, const Rational& s);

  std::int64_t prime() const { return p_; }
  bool is_zero() const { return parts_.empty(); }
  const std::map<Rational, Rational>& parts() const { return parts_; }

  /// (q_i, s_i) with v_p(q_i) = 0, sorted by increasing s_i.
  std::vector<std::pair<Rational, Rational>> terms() const;

  /// min s_i; std::nullopt (= +inf) for zero.
  std::optional<Rational> valuation() const;
  /// -valuation, NEG_INF for zero.
  LogMag magnitude() const;
  /// Image of the minimal-s term's q in F_p, in 0..p-1. Throws ResidueOfZero.
  std::int64_t leading_residue() const;

  /// Inverse of a single-term scalar; throws std::invalid_argument otherwise.
  ExtScalar inverse() const;

  ExtScalar operator-() const;
  friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b);
  friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b);
  friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b);
  friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
    return a.p_ == b.p_ && a.parts_ == b.parts_;
  }

 private:
  void add_part(const Rational& f, const Rational& r);

  std::int64_t p_;
  std::map<Rational, Rational> parts_;
};

ExtScalar pow(const ExtScalar& a, std::int64_t e);
std::string to_string(const ExtScalar& a);

/// Finite Laurent polynomial sum a_k T^k with exact coefficients.
class LaurentExt {
 public:
  explicit LaurentExt(std::int64_t p = 2) : p_(p) {}
  static LaurentExt constant(const ExtScalar& c);
  static LaurentExt from_rationals(std::int64_t p, const std::map<std::int64_t, Rational>& coeffs);

  std::int64_t prime() const { return p_; }
  const std::map<std::int64_t, ExtScalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  ExtScalar coeff(std::int64_t k) const;
  void add_term(std::int64_t k, const ExtScalar& c);
  std::int64_t min_degree() const;
  std::int64_t max_degree() const;

  /// Multiplication by T^s.
  LaurentExt shift(std::int64_t s) const;
  LaurentExt scale(const ExtScalar& c) const;
  LaurentExt operator-() const;
  friend LaurentExt operator+(const LaurentExt& a, const LaurentExt& b);
  friend LaurentExt operator-(const LaurentExt& a, const LaurentExt& b);
  friend LaurentExt operator*(const LaurentExt& a, const LaurentExt& b);
  friend bool operator==(const LaurentExt& a, const LaurentExt& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::int64_t p_;
  std::map<std::int64_t, ExtScalar> coeffs_;
};

LaurentExt pow(const LaurentExt& a, std::int64_t e);
std::string to_string(const LaurentExt& a);

/// degree -> -valuation(a_k).
NewtonData to_newton(const LaurentExt& L);
/// log_p |L(eta_{0,p^lambda})|.
LogMag mag_at(const LaurentExt& L, const Rational& lambda);
/// Substitutes T = t + alpha into a polynomial (min degree >= 0).
LaurentExt substitute_shift(const LaurentExt& L, const ExtScalar& alpha);

/// Laurent polynomial over F_p, coefficients in 1..p-1.
class ResiduePoly {
 public:
  explicit ResiduePoly(std::int64_t p = 2) : p_(p) {}
  ResiduePoly(std::int64_t p, const std::map<std::int64_t, std::int64_t>& coeffs);
  static ResiduePoly monomial(std::int64_t p, std::int64_t coeff, std::int64_t degree);

  std::int64_t prime() const { return p_; }
  const std::map<std::int64_t, std::int64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t coeff(std::int64_t k) const;
  std::int64_t min_degree() const;
  std::int64_t max_degree() const;

  ResiduePoly shift(std::int64_t s) const;
  ResiduePoly scale(std::int64_t c) const;
  ResiduePoly derivative() const;
  friend ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b);
  friend ResiduePoly operator-(const ResiduePoly& a, const ResiduePoly& b);
  friend ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b);
  friend bool operator==(const ResiduePoly& a, const ResiduePoly& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::int64_t p_;
  std::map<std::int64_t, std::int64_t> coeffs_;
};

std::int64_t mod_p(const Rational& q, std::int64_t p);
std::int64_t inverse_mod(std::int64_t a, std::int64_t p);
ResiduePoly pow(const ResiduePoly& a, std::int64_t e);
/// Frobenius-free check: the support lies in pZ. Returns the p-th root.
std::optional<ResiduePoly> is_pth_power(const ResiduePoly& f);
std::string to_string(const ResiduePoly& f);

/// Element num/den of F_p(t), kept reduced: gcd(num, den) = 1 and den has
/// unit leading coefficient with its lowest term in degree 0.
class ResidueFraction {
 public:
  ResidueFraction(ResiduePoly num, ResiduePoly den);
  const ResiduePoly& num() const { return num_; }
  const ResiduePoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  friend bool operator==(const ResidueFraction& a, const ResidueFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  ResiduePoly num_;
  ResiduePoly den_;
};

/// p-th root of a reduced fraction when it exists.
std::optional<ResidueFraction> is_pth_power(const ResidueFraction& f);
std::string to_string(const ResidueFraction& f);

/// Argmax terms of L at log-radius lambda, in the variable t = class of T p^lambda.
/// Throws NonIntegralRadius.
ResiduePoly residue_at(const LaurentExt& L, const Rational& lambda);

struct FuncRep {
  LaurentExt num;
  LaurentExt den;
};

/// Throws DenominatorVanishes.
LogMag func_eval_mag(const FuncRep& F, const Rational& lambda);
/// Throws DenominatorResidueZero, NonIntegralRadius.
ResidueFraction func_residue(const FuncRep& F, const Rational& lambda);

}  // namespace annulab
