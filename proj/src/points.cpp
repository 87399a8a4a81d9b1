#include "annulab/points.hpp"

#include "annulab/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace annulab {

namespace {

void require_off_segment(const Rational& m, const Rational& r) {
  if (r >= m)
    throw DomainError(ErrorCode::InvalidPoint,
                      "radius " + to_string(r) + " must be below center magnitude " + to_string(m));
}

void require_h(int h) {
  if (h < 1) throw std::invalid_argument("h must be positive");
  if (h > 60) throw std::invalid_argument("h too large");
}

Integer ipow(std::int64_t p, int e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return out;
}

// One step backwards along z -> z^p: the radius of every preimage of
// eta_{z,r} with |z| = p^m.
Rational pull_radius(std::int64_t p, const Rational& m, const Rational& r, const Thresholds& th) {
  Rational pp(static_cast<long>(p));
  if (r <= m + th.tau) return r + 1 - (pp - 1) * m / pp;
  return r / pp;
}

std::vector<FiberLevel> walk(std::int64_t p, int h, const Rational& m, const Rational& r) {
  const Thresholds th = Thresholds::for_prime(p);
  Rational pp(static_cast<long>(p));
  std::vector<FiberLevel> levels;
  Rational cm = m;
  Rational cr = r;
  for (int k = 1; k <= h; ++k) {
    Rational next_m = cm / pp;
    Rational next_r = pull_radius(p, cm, cr, th);
    Rational sep = next_m + th.tau1;
    levels.push_back({k, next_m, next_r, sep, next_r < sep});
    cm = next_m;
    cr = next_r;
  }
  return levels;
}

}  // namespace

TrunkPoint push_p(const TrunkPoint& pt, std::int64_t p) {
  const Thresholds th = Thresholds::for_prime(p);
  require_off_segment(pt.center_mag, pt.radius);
  Rational pp(static_cast<long>(p));
  TrunkPoint out;
  out.center_mag = pp * pt.center_mag;
  if (pt.radius <= pt.center_mag + th.tau1)
    out.radius = pt.radius - 1 + (pp - 1) * pt.center_mag;
  else
    out.radius = pp * pt.radius;
  out.center_tag = pt.center_tag + "^" + std::to_string(p);
  return out;
}

Integer fiber_count(std::int64_t p, int h, const Rational& m, const Rational& r) {
  const Thresholds th = Thresholds::for_prime(p);
  require_h(h);
  require_off_segment(m, r);
  if (r >= m + th.tau) return 1;
  for (int i = 1; i < h; ++i) {
    Rational lo = m - i + th.tau;
    Rational hi = m - i + th.tau1;
    if (r >= lo && r < hi) return ipow(p, i);
  }
  return ipow(p, h);
}

Integer fiber_count_recursive(std::int64_t p, int h, const Rational& m, const Rational& r) {
  require_h(h);
  require_off_segment(m, r);
  Integer count = 1;
  for (const auto& lv : walk(p, h, m, r))
    if (lv.distinct) count *= p;
  return count;
}

std::vector<FiberRow> fiber_tree(std::int64_t p, int h, const Rational& m,
                                 const std::vector<Rational>& radii) {
  std::vector<Rational> sorted = radii;
  std::sort(sorted.begin(), sorted.end(), [](const Rational& a, const Rational& b) { return a > b; });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<FiberRow> rows;
  for (const auto& r : sorted) {
    FiberRow row;
    row.radius = r;
    row.count = fiber_count(p, h, m, r);
    row.levels = walk(p, h, m, r);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace annulab
