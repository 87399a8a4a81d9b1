#pragma once

// Newton data of finitely supported Laurent functions on annuli.

#include "annulab/valnum.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

namespace annulab {

/// degree -> log_p |a_i|. Zero coefficients are simply absent.
class NewtonData {
 public:
  NewtonData() = default;
  NewtonData(std::initializer_list<std::pair<const std::int64_t, Rational>> terms);
  explicit NewtonData(std::map<std::int64_t, Rational> terms);

  const std::map<std::int64_t, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void set(std::int64_t degree, Rational log_mag);

  friend bool operator==(const NewtonData& a, const NewtonData& b) { return a.terms_ == b.terms_; }

 private:
  std::map<std::int64_t, Rational> terms_;
};

/// log_p |f(eta_{0,p^lambda})| = max_i (c_i + i*lambda). NEG_INF for empty data.
LogMag eval_at(const NewtonData& nd, const Rational& lambda);

std::optional<std::int64_t> dominant_degree(const NewtonData& nd, const LogInterval& I);
bool is_invertible(const NewtonData& nd, const LogInterval& I);
bool is_coordinate(const NewtonData& nd, const LogInterval& I);
/// Throws DomainError(NotInvertible).
std::int64_t degree_class(const NewtonData& nd, const LogInterval& I);

/// f = a_{i0} T^{i0} (1 + u) with |u| < 1 on the interval.
struct Normalized {
  std::int64_t degree = 0;
  Rational coeff;
  NewtonData remainder;
};

Normalized normalize(const NewtonData& nd, const LogInterval& I);
NewtonData recombine(const Normalized& n);

/// {lambda in I : eval_at(u, lambda) < tau}. An empty u gives I itself.
LogInterval split_locus(const NewtonData& u, const LogInterval& I, std::int64_t p);

struct ImageInterval {
  LogInterval interval;
  std::int64_t degree;
};

/// Image of the skeleton under f; throws NotInvertible / ZeroDegree.
ImageInterval image_interval(const NewtonData& nd, const LogInterval& I);

}  // namespace annulab
