#include "annulab/residues.hpp"

#include "annulab/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace annulab {

namespace {

Rational p_power_int(std::int64_t p, const Integer& e) {
  Integer base;
  long ee = e.get_si();
  mpz_ui_pow_ui(base.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(ee < 0 ? -ee : ee));
  return ee < 0 ? Rational(Integer(1), base) : Rational(base);
}

void same_prime(std::int64_t a, std::int64_t b) {
  if (a != b) throw std::invalid_argument("mixing scalars over different primes");
}

Rational frac_part(const Rational& s) { return s - Rational(floor_of(s)); }

}  // namespace

ExtScalar::ExtScalar(std::int64_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("ExtScalar needs a prime, got " + std::to_string(p));
}

ExtScalar ExtScalar::from_rational(std::int64_t p, const Rational& q) {
  ExtScalar out(p);
  out.add_part(Rational(0), q);
  return out;
}

ExtScalar ExtScalar::monomial(std::int64_t p, const Rational& q, const Rational& s) {
  ExtScalar out(p);
  Rational f = frac_part(s);
  out.add_part(f, q * p_power_int(p, floor_of(s)));
  return out;
}

void ExtScalar::add_part(const Rational& f, const Rational& r) {
  if (r == 0) return;
  auto it = parts_.find(f);
  if (it == parts_.end()) {
    Rational rr = r;
    rr.canonicalize();
    parts_.emplace(f, rr);
    return;
  }
  it->second += r;
  if (it->second == 0) parts_.erase(it);
}

std::vector<std::pair<Rational, Rational>> ExtScalar::terms() const {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& [f, r] : parts_) {
    std::int64_t v = valuation_p(r, p_);
    Rational q = r / p_power_int(p_, Integer(static_cast<long>(v)));
    out.emplace_back(q, f + Rational(static_cast<long>(v)));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

std::optional<Rational> ExtScalar::valuation() const {
  if (parts_.empty()) return std::nullopt;
  std::optional<Rational> best;
  for (const auto& [f, r] : parts_) {
    Rational s = f + Rational(static_cast<long>(valuation_p(r, p_)));
    if (!best || s < *best) best = s;
  }
  return best;
}

LogMag ExtScalar::magnitude() const {
  auto v = valuation();
  if (!v) return LogMag::neg_inf();
  return LogMag(Rational(-*v));
}

std::int64_t ExtScalar::leading_residue() const {
  if (parts_.empty()) throw DomainError(ErrorCode::ResidueOfZero, "residue of the zero scalar");
  return mod_p(terms().front().first, p_);
}

ExtScalar ExtScalar::inverse() const {
  if (parts_.size() != 1) throw std::invalid_argument("only single-term scalars are inverted");
  const auto& [f, r] = *parts_.begin();
  ExtScalar out(p_);
  if (f == 0)
    out.add_part(f, Rational(1) / r);
  else
    out.add_part(Rational(1) - f, Rational(1) / (r * Rational(static_cast<long>(p_))));
  return out;
}

ExtScalar ExtScalar::operator-() const {
  ExtScalar out(p_);
  for (const auto& [f, r] : parts_) out.parts_.emplace(f, Rational(-r));
  return out;
}

ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
  same_prime(a.p_, b.p_);
  ExtScalar out = a;
  for (const auto& [f, r] : b.parts_) out.add_part(f, r);
  return out;
}

ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) { return a + (-b); }

ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
  same_prime(a.p_, b.p_);
  ExtScalar out(a.p_);
  Rational pp(static_cast<long>(a.p_));
  for (const auto& [f1, r1] : a.parts_)
    for (const auto& [f2, r2] : b.parts_) {
      Rational f = f1 + f2;
      Rational r = r1 * r2;
      if (f >= 1) {
        f -= 1;
        r *= pp;
      }
      out.add_part(f, r);
    }
  return out;
}

ExtScalar pow(const ExtScalar& a, std::int64_t e) {
  if (e < 0) return pow(a.inverse(), -e);
  ExtScalar out = ExtScalar::from_rational(a.prime(), Rational(1));
  ExtScalar base = a;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

std::string to_string(const ExtScalar& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [q, e] : a.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(q);
    if (e != 0) s += "*p^" + (is_integer(e) ? to_string(e) : "(" + to_string(e) + ")");
  }
  return s;
}

LaurentExt LaurentExt::constant(const ExtScalar& c) {
  LaurentExt out(c.prime());
  out.add_term(0, c);
  return out;
}

LaurentExt LaurentExt::from_rationals(std::int64_t p, const std::map<std::int64_t, Rational>& coeffs) {
  LaurentExt out(p);
  for (const auto& [k, q] : coeffs) out.add_term(k, ExtScalar::from_rational(p, q));
  return out;
}

ExtScalar LaurentExt::coeff(std::int64_t k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? ExtScalar(p_) : it->second;
}

void LaurentExt::add_term(std::int64_t k, const ExtScalar& c) {
  same_prime(p_, c.prime());
  if (c.is_zero()) return;
  auto it = coeffs_.find(k);
  if (it == coeffs_.end()) {
    coeffs_.emplace(k, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

std::int64_t LaurentExt::min_degree() const {
  if (coeffs_.empty()) throw std::invalid_argument("degree of the zero Laurent polynomial");
  return coeffs_.begin()->first;
}

std::int64_t LaurentExt::max_degree() const {
  if (coeffs_.empty()) throw std::invalid_argument("degree of the zero Laurent polynomial");
  return coeffs_.rbegin()->first;
}

LaurentExt LaurentExt::shift(std::int64_t s) const {
  LaurentExt out(p_);
  for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k + s, c);
  return out;
}

LaurentExt LaurentExt::scale(const ExtScalar& c) const {
  LaurentExt out(p_);
  for (const auto& [k, a] : coeffs_) out.add_term(k, a * c);
  return out;
}

LaurentExt LaurentExt::operator-() const {
  LaurentExt out(p_);
  for (const auto& [k, a] : coeffs_) out.coeffs_.emplace(k, -a);
  return out;
}

LaurentExt operator+(const LaurentExt& a, const LaurentExt& b) {
  same_prime(a.p_, b.p_);
  LaurentExt out = a;
  for (const auto& [k, c] : b.coeffs_) out.add_term(k, c);
  return out;
}

LaurentExt operator-(const LaurentExt& a, const LaurentExt& b) { return a + (-b); }

LaurentExt operator*(const LaurentExt& a, const LaurentExt& b) {
  same_prime(a.p_, b.p_);
  LaurentExt out(a.p_);
  for (const auto& [i, x] : a.coeffs_)
    for (const auto& [j, y] : b.coeffs_) out.add_term(i + j, x * y);
  return out;
}

LaurentExt pow(const LaurentExt& a, std::int64_t e) {
  if (e < 0) throw std::invalid_argument("negative power of a Laurent polynomial");
  LaurentExt out = LaurentExt::constant(ExtScalar::from_rational(a.prime(), Rational(1)));
  for (std::int64_t i = 0; i < e; ++i) out = out * a;
  return out;
}

std::string to_string(const LaurentExt& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : a.coeffs()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")";
    if (k != 0) s += "*T^" + std::to_string(k);
  }
  return s;
}

NewtonData to_newton(const LaurentExt& L) {
  NewtonData nd;
  for (const auto& [k, c] : L.coeffs()) nd.set(k, -*c.valuation());
  return nd;
}

LogMag mag_at(const LaurentExt& L, const Rational& lambda) { return eval_at(to_newton(L), lambda); }

LaurentExt substitute_shift(const LaurentExt& L, const ExtScalar& alpha) {
  LaurentExt out(L.prime());
  if (L.is_zero()) return out;
  if (L.min_degree() < 0) throw std::invalid_argument("substitute_shift needs a polynomial");
  // Horner in T = t + alpha
  LaurentExt lin(L.prime());
  lin.add_term(1, ExtScalar::from_rational(L.prime(), Rational(1)));
  lin.add_term(0, alpha);
  for (std::int64_t k = L.max_degree(); k >= 0; --k) {
    out = out * lin;
    out.add_term(0, L.coeff(k));
  }
  return out;
}

std::int64_t mod_p(const Rational& q, std::int64_t p) {
  Integer pp(static_cast<long>(p));
  Integer n, d;
  mpz_fdiv_r(n.get_mpz_t(), q.get_num_mpz_t(), pp.get_mpz_t());
  mpz_fdiv_r(d.get_mpz_t(), q.get_den_mpz_t(), pp.get_mpz_t());
  if (d == 0) throw std::invalid_argument("residue of a rational with p in the denominator");
  return (n.get_si() * inverse_mod(d.get_si(), p)) % p;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::invalid_argument("zero has no inverse mod p");
  std::int64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

ResiduePoly::ResiduePoly(std::int64_t p, const std::map<std::int64_t, std::int64_t>& coeffs) : p_(p) {
  for (const auto& [k, c] : coeffs) {
    std::int64_t r = ((c % p) + p) % p;
    if (r) coeffs_[k] = r;
  }
}

ResiduePoly ResiduePoly::monomial(std::int64_t p, std::int64_t coeff, std::int64_t degree) {
  return ResiduePoly(p, {{degree, coeff}});
}

std::int64_t ResiduePoly::coeff(std::int64_t k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? 0 : it->second;
}

std::int64_t ResiduePoly::min_degree() const {
  if (coeffs_.empty()) throw std::invalid_argument("degree of the zero residue polynomial");
  return coeffs_.begin()->first;
}

std::int64_t ResiduePoly::max_degree() const {
  if (coeffs_.empty()) throw std::invalid_argument("degree of the zero residue polynomial");
  return coeffs_.rbegin()->first;
}

ResiduePoly ResiduePoly::shift(std::int64_t s) const {
  ResiduePoly out(p_);
  for (const auto& [k, c] : coeffs_) out.coeffs_[k + s] = c;
  return out;
}

ResiduePoly ResiduePoly::scale(std::int64_t c) const {
  std::map<std::int64_t, std::int64_t> m;
  for (const auto& [k, a] : coeffs_) m[k] = (a * (((c % p_) + p_) % p_)) % p_;
  return ResiduePoly(p_, m);
}

ResiduePoly ResiduePoly::derivative() const {
  std::map<std::int64_t, std::int64_t> m;
  for (const auto& [k, a] : coeffs_) m[k - 1] = (a * (((k % p_) + p_) % p_)) % p_;
  return ResiduePoly(p_, m);
}

ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b) {
  same_prime(a.p_, b.p_);
  std::map<std::int64_t, std::int64_t> m = a.coeffs_;
  for (const auto& [k, c] : b.coeffs_) m[k] += c;
  return ResiduePoly(a.p_, m);
}

ResiduePoly operator-(const ResiduePoly& a, const ResiduePoly& b) { return a + b.scale(-1); }

ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b) {
  same_prime(a.p_, b.p_);
  std::map<std::int64_t, std::int64_t> m;
  for (const auto& [i, x] : a.coeffs_)
    for (const auto& [j, y] : b.coeffs_) m[i + j] = (m[i + j] + x * y) % a.p_;
  return ResiduePoly(a.p_, m);
}

ResiduePoly pow(const ResiduePoly& a, std::int64_t e) {
  if (e < 0) throw std::invalid_argument("negative power of a residue polynomial");
  ResiduePoly out = ResiduePoly::monomial(a.prime(), 1, 0);
  for (std::int64_t i = 0; i < e; ++i) out = out * a;
  return out;
}

std::optional<ResiduePoly> is_pth_power(const ResiduePoly& f) {
  if (f.is_zero()) throw std::invalid_argument("is_pth_power of zero");
  const std::int64_t p = f.prime();
  std::map<std::int64_t, std::int64_t> root;
  for (const auto& [k, c] : f.coeffs()) {
    if (k % p != 0) return std::nullopt;
    root[k / p] = c;  // Frobenius fixes F_p
  }
  return ResiduePoly(p, root);
}

std::string to_string(const ResiduePoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    if (!s.empty()) s += " + ";
    const auto [k, c] = *it;
    if (k == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c) + "*";
    s += "t";
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s;
}

namespace {

// Dense F_p polynomials (index = degree), used for gcd.
using Dense = std::vector<std::int64_t>;

Dense to_dense(const ResiduePoly& f) {
  Dense d(static_cast<std::size_t>(f.max_degree() + 1), 0);
  for (const auto& [k, c] : f.coeffs()) d[static_cast<std::size_t>(k)] = c;
  return d;
}

ResiduePoly from_dense(std::int64_t p, const Dense& d) {
  std::map<std::int64_t, std::int64_t> m;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k]) m[static_cast<std::int64_t>(k)] = d[k];
  return ResiduePoly(p, m);
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

// a = q*b + r
void divmod(Dense a, const Dense& b, std::int64_t p, Dense& q, Dense& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, 0);
  std::int64_t inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    std::int64_t f = a.back() * inv % p;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - f * b[i]) % p + p) % p;
    trim(a);
  }
  trim(q);
  r = a;
}

Dense gcd_dense(Dense a, Dense b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense q, r;
    divmod(a, b, p, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

ResidueFraction::ResidueFraction(ResiduePoly num, ResiduePoly den) : num_(std::move(num)), den_(std::move(den)) {
  const std::int64_t p = den_.prime();
  if (den_.is_zero()) throw DomainError(ErrorCode::DenominatorResidueZero, "zero residue denominator");
  if (num_.is_zero()) {
    num_ = ResiduePoly(p);
    den_ = ResiduePoly::monomial(p, 1, 0);
    return;
  }
  // move monomial factors into the numerator
  std::int64_t a = num_.min_degree();
  std::int64_t b = den_.min_degree();
  Dense n0 = to_dense(num_.shift(-a));
  Dense d0 = to_dense(den_.shift(-b));
  Dense g = gcd_dense(n0, d0, p);
  Dense q, r;
  divmod(n0, g, p, q, r);
  n0 = q;
  divmod(d0, g, p, q, r);
  d0 = q;
  std::int64_t lead_inv = inverse_mod(d0.back(), p);
  num_ = from_dense(p, n0).scale(lead_inv).shift(a - b);
  den_ = from_dense(p, d0).scale(lead_inv);
}

std::optional<ResidueFraction> is_pth_power(const ResidueFraction& f) {
  if (f.is_zero()) throw std::invalid_argument("is_pth_power of zero");
  auto n = is_pth_power(f.num());
  auto d = is_pth_power(f.den());
  if (!n || !d) return std::nullopt;
  return ResidueFraction(*n, *d);
}

std::string to_string(const ResidueFraction& f) {
  if (f.den() == ResiduePoly::monomial(f.den().prime(), 1, 0)) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

ResiduePoly residue_at(const LaurentExt& L, const Rational& lambda) {
  if (!is_integer(lambda))
    throw DomainError(ErrorCode::NonIntegralRadius, "residues need an integral log-radius, got " + to_string(lambda));
  ResiduePoly out(L.prime());
  if (L.is_zero()) return out;
  NewtonData nd = to_newton(L);
  LogMag top = eval_at(nd, lambda);
  std::map<std::int64_t, std::int64_t> m;
  for (const auto& [k, c] : L.coeffs())
    if (LogMag(Rational(nd.terms().at(k) + Rational(static_cast<long>(k)) * lambda)) == top)
      m[k] = c.leading_residue();
  return ResiduePoly(L.prime(), m);
}

LogMag func_eval_mag(const FuncRep& F, const Rational& lambda) {
  if (F.den.is_zero()) throw DomainError(ErrorCode::DenominatorVanishes, "zero denominator");
  LogMag d = mag_at(F.den, lambda);
  LogMag n = mag_at(F.num, lambda);
  if (n.is_neg_inf()) return n;
  return LogMag(Rational(n.value() - d.value()));
}

ResidueFraction func_residue(const FuncRep& F, const Rational& lambda) {
  if (F.den.is_zero()) throw DomainError(ErrorCode::DenominatorResidueZero, "zero denominator");
  ResiduePoly d = residue_at(F.den, lambda);
  if (d.is_zero()) throw DomainError(ErrorCode::DenominatorResidueZero, "denominator residue vanishes");
  return ResidueFraction(residue_at(F.num, lambda), d);
}

}  // namespace annulab
