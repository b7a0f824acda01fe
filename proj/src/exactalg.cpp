#include "chowla/exactalg.hpp"

#include "chowla/arith.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace chowla {

namespace {

constexpr int kGuardDigits = 10;

void require_conductor(int p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("CycloElem: conductor must be an odd prime");
}

void require_same(const CycloElem& a, const CycloElem& b) {
  if (a.p() != b.p()) throw std::invalid_argument("conductor mismatch");
  require_conductor(a.p());
}

// Reduces a polynomial in xi (any length) to the power basis of Q(xi_p).
std::vector<Rational> reduce_poly(const std::vector<Rational>& poly, int p) {
  std::vector<Rational> folded(p);
  for (std::size_t i = 0; i < poly.size(); ++i) folded[i % p] += poly[i];
  std::vector<Rational> out(p - 1);
  for (int j = 0; j < p - 1; ++j) out[j] = folded[j] - folded[p - 1];
  return out;
}

Integer lcm_of_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) l = bmp::lcm(l, Integer(bmp::denominator(q)));
  return l;
}

// Q[x] helpers used by the inverse; low degree first, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

void poly_divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
  rem = num;
  quot.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
  const Rational& lead = den.back();
  while (!rem.empty() && rem.size() >= den.size()) {
    std::size_t shift = rem.size() - den.size();
    Rational f = rem.back() / lead;
    quot[shift] = f;
    for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= f * den[i];
    rem.pop_back();
    trim(rem);
  }
  trim(quot);
}

}  // namespace

int default_digits() {
  if (const char* env = std::getenv("CHOWLA_PRECISION_DIGITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 20 && v <= 10000) return static_cast<int>(v);
  }
  return kDefaultDigits;
}

PrecisionScope::PrecisionScope(int digits) : saved_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(digits + kGuardDigits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real pi_real() { return bmp::atan(Real(1)) * 4; }

std::string to_string(const Rational& q) {
  return bmp::numerator(q).str() + "/" + bmp::denominator(q).str();
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
    Integer num(std::string(text.substr(0, slash)));
    Integer den(std::string(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("malformed rational: zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
}

std::string to_decimal(const Real& x, int digits) {
  return x.str(digits, std::ios_base::fmtflags(0));
}

ComplexApprox cpow(const ComplexApprox& z, int n) {
  if (n < 0) return cpow(ComplexApprox(Real(1), Real(0), z.digits) / z, -n);
  ComplexApprox result(Real(1), Real(0), z.digits);
  ComplexApprox base = z;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

ComplexApprox unit_root(std::int64_t num, std::int64_t den, int digits) {
  PrecisionScope scope(digits);
  std::int64_t n = mod(num, den);
  if (4 * n % den == 0) return i_power(4 * n / den, digits);
  Real angle = 2 * pi_real() * n / den;
  return {bmp::cos(angle), bmp::sin(angle), digits};
}

ComplexApprox i_power(std::int64_t n, int digits) {
  PrecisionScope scope(digits);
  switch (mod(n, 4)) {
    case 0: return {Real(1), Real(0), digits};
    case 1: return {Real(0), Real(1), digits};
    case 2: return {Real(-1), Real(0), digits};
    default: return {Real(0), Real(-1), digits};
  }
}

// -- CycloElem --------------------------------------------------------------

CycloElem::CycloElem(int p) : p_(p), coeffs_(p - 1) { require_conductor(p); }

CycloElem::CycloElem(int p, std::vector<Rational> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  require_conductor(p);
  if (coeffs_.size() != static_cast<std::size_t>(p - 1)) {
    throw std::invalid_argument("CycloElem: expected p-1 coefficients");
  }
}

CycloElem CycloElem::constant(int p, const Rational& c) {
  CycloElem out(p);
  out.coeffs_[0] = c;
  return out;
}

CycloElem CycloElem::xi_power(int p, std::int64_t j) {
  CycloElem out(p);
  std::int64_t e = mod(j, p);
  if (e == p - 1) {
    for (auto& c : out.coeffs_) c = -1;
  } else {
    out.coeffs_[e] = 1;
  }
  return out;
}

bool CycloElem::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloElem::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) return false;
  }
  return true;
}

CycloElem CycloElem::operator-() const {
  CycloElem out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloElem& CycloElem::operator+=(const CycloElem& b) {
  require_same(*this, b);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += b.coeffs_[j];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& b) {
  require_same(*this, b);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= b.coeffs_[j];
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& b) { return *this = cyclo_mul(*this, b); }

CycloElem& CycloElem::operator*=(const Rational& s) {
  require_conductor(p_);
  for (auto& c : coeffs_) c *= s;
  return *this;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) { return cyclo_mul(a, b); }

CycloElem operator/(const CycloElem& a, const CycloElem& b) { return cyclo_mul(a, cyclo_inv(b)); }

std::ostream& operator<<(std::ostream& os, const CycloElem& a) {
  bool first = true;
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
    const auto& c = a.coeffs()[j];
    if (c == 0) continue;
    if (!first) os << " + ";
    os << "(" << c << ")";
    if (j > 0) os << "*xi^" << j;
    first = false;
  }
  if (first) os << "0";
  return os;
}

CycloElem cyclo_mul(const CycloElem& a, const CycloElem& b) {
  require_same(a, b);
  const int p = a.p();
  // Multiply integer numerators over common denominators, reduce modulo
  // x^p - 1, then apply xi^(p-1) = -(1 + ... + xi^(p-2)).
  Integer da = lcm_of_denominators(a.coeffs());
  Integer db = lcm_of_denominators(b.coeffs());
  std::vector<Integer> ia(p - 1), ib(p - 1);
  for (int j = 0; j < p - 1; ++j) {
    ia[j] = bmp::numerator(a.coeffs()[j]) * (da / bmp::denominator(a.coeffs()[j]));
    ib[j] = bmp::numerator(b.coeffs()[j]) * (db / bmp::denominator(b.coeffs()[j]));
  }
  std::vector<Integer> folded(p);
  for (int i = 0; i < p - 1; ++i) {
    if (ia[i] == 0) continue;
    for (int j = 0; j < p - 1; ++j) {
      if (ib[j] == 0) continue;
      int e = i + j;
      if (e >= p) e -= p;
      folded[e] += ia[i] * ib[j];
    }
  }
  Integer den = da * db;
  std::vector<Rational> out(p - 1);
  for (int j = 0; j < p - 1; ++j) out[j] = Rational(folded[j] - folded[p - 1], den);
  return CycloElem(p, std::move(out));
}

CycloElem cyclo_inv(const CycloElem& a) {
  require_conductor(a.p());
  if (a.is_zero()) throw std::domain_error("division by zero");
  const int p = a.p();
  Poly r0(p, Rational(1));  // Phi_p
  Poly r1 = a.coeffs();
  trim(r1);
  Poly s0;
  Poly s1{Rational(1)};
  while (r1.size() > 1) {
    Poly q, rem;
    poly_divmod(r0, r1, q, rem);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant c with s1 * a = c mod Phi_p.
  Rational c = r1.at(0);
  for (auto& x : s1) x /= c;
  return CycloElem(p, reduce_poly(s1, p));
}

// -- Galois action ----------------------------------------------------------

GaloisMap::GaloisMap(int p, std::int64_t c) : p_(p), c_(mod(c, p)) {
  require_conductor(p);
  if (c_ == 0) throw std::invalid_argument("GaloisMap: c must be coprime to p");
}

GaloisMap GaloisMap::compose(const GaloisMap& other) const {
  if (other.p_ != p_) throw std::invalid_argument("conductor mismatch");
  return GaloisMap(p_, c_ * other.c_ % p_);
}

CycloElem GaloisMap::operator()(const CycloElem& a) const {
  if (a.p() != p_) throw std::invalid_argument("conductor mismatch");
  std::vector<Rational> poly(p_);
  for (int j = 0; j < p_ - 1; ++j) {
    if (a.coeffs()[j] == 0) continue;
    poly[c_ * j % p_] += a.coeffs()[j];
  }
  return CycloElem(p_, reduce_poly(poly, p_));
}

CycloElem galois_apply(const GaloisMap& s, const CycloElem& a) { return s(a); }

Rational trace_Q(const CycloElem& a) {
  require_conductor(a.p());
  Rational t = Rational(a.p() - 1) * a.coeffs()[0];
  for (std::size_t j = 1; j < a.coeffs().size(); ++j) t -= a.coeffs()[j];
  return t;
}

ComplexApprox embed(const CycloElem& a, int digits) {
  require_conductor(a.p());
  PrecisionScope scope(digits + 5);
  const int p = a.p();
  Real step = 2 * pi_real() / p;
  Real re = 0, im = 0;
  for (int j = 0; j < p - 1; ++j) {
    const auto& c = a.coeffs()[j];
    if (c == 0) continue;
    Real cj = Real(c);
    re += cj * bmp::cos(step * j);
    im += cj * bmp::sin(step * j);
  }
  return {re, im, digits};
}

}  // namespace chowla
