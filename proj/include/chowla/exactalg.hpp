#pragma once

// Exact arithmetic: arbitrary-precision rationals, the cyclotomic field
// Q(xi_p) in the power basis {1, xi, ..., xi^(p-2)}, its Galois action,
// the absolute trace, and the complex embedding xi_p -> e^(2 pi i / p).

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace chowla {

namespace bmp = boost::multiprecision;

using Integer = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;
using Real = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;

inline constexpr int kDefaultDigits = 50;

/// Working precision from CHOWLA_PRECISION_DIGITS, else kDefaultDigits.
int default_digits();

/// Sets the default precision of newly created Reals for its lifetime.
/// A few guard digits are added on top of the requested decimal digits.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

Real pi_real();

/// "num/den" (always with a denominator).
std::string to_string(const Rational& q);
/// Accepts "num/den" or "num".
Rational parse_rational(std::string_view text);
/// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Real& x, int digits);

// -- complex approximations -------------------------------------------------

struct ComplexApprox {
  Real re;
  Real im;
  int digits = kDefaultDigits;

  ComplexApprox() = default;
  ComplexApprox(Real r, Real i, int d) : re(std::move(r)), im(std::move(i)), digits(d) {}

  ComplexApprox conj() const { return {re, -im, digits}; }
  Real norm() const { return re * re + im * im; }
  Real abs() const { return bmp::sqrt(norm()); }

  friend ComplexApprox operator+(const ComplexApprox& a, const ComplexApprox& b) {
    return {a.re + b.re, a.im + b.im, std::min(a.digits, b.digits)};
  }
  friend ComplexApprox operator-(const ComplexApprox& a, const ComplexApprox& b) {
    return {a.re - b.re, a.im - b.im, std::min(a.digits, b.digits)};
  }
  friend ComplexApprox operator*(const ComplexApprox& a, const ComplexApprox& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, std::min(a.digits, b.digits)};
  }
  friend ComplexApprox operator*(const Real& s, const ComplexApprox& a) {
    return {s * a.re, s * a.im, a.digits};
  }
  friend ComplexApprox operator/(const ComplexApprox& a, const ComplexApprox& b) {
    Real d = b.norm();
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d,
            std::min(a.digits, b.digits)};
  }
  ComplexApprox& operator+=(const ComplexApprox& b) { return *this = *this + b; }
  ComplexApprox& operator*=(const ComplexApprox& b) { return *this = *this * b; }
};

ComplexApprox cpow(const ComplexApprox& z, int n);
/// e^(2 pi i num/den).
ComplexApprox unit_root(std::int64_t num, std::int64_t den, int digits);
/// i^n for integer n.
ComplexApprox i_power(std::int64_t n, int digits);

// -- cyclotomic field -------------------------------------------------------

/// Element of Q(xi_p): sum_{j=0}^{p-2} c_j xi_p^j. Always canonical.
///
/// A default-constructed element has conductor 0 and is only a placeholder
/// for containers; every arithmetic operation rejects it.
class CycloElem {
 public:
  CycloElem() = default;
  /// The zero element of Q(xi_p).
  explicit CycloElem(int p);
  CycloElem(int p, std::vector<Rational> coeffs);

  static CycloElem constant(int p, const Rational& c);
  /// xi_p^j for any integer j.
  static CycloElem xi_power(int p, std::int64_t j);

  int p() const { return p_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; only meaningful when is_rational().
  const Rational& rational_value() const { return coeffs_.at(0); }

  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& b);
  CycloElem& operator-=(const CycloElem& b);
  CycloElem& operator*=(const CycloElem& b);
  CycloElem& operator*=(const Rational& s);

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator*(CycloElem a, const Rational& s) { return a *= s; }
  friend CycloElem operator*(const Rational& s, CycloElem a) { return a *= s; }
  friend CycloElem operator/(const CycloElem& a, const CycloElem& b);
  friend bool operator==(const CycloElem& a, const CycloElem& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int p_ = 0;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycloElem& a);

CycloElem cyclo_mul(const CycloElem& a, const CycloElem& b);
/// Inverse via the extended Euclidean algorithm against Phi_p in Q[x].
CycloElem cyclo_inv(const CycloElem& a);

/// The automorphism sigma_c: xi_p -> xi_p^c.
class GaloisMap {
 public:
  GaloisMap(int p, std::int64_t c);
  int p() const { return p_; }
  std::int64_t c() const { return c_; }
  /// (this o other)(x) = this(other(x)).
  GaloisMap compose(const GaloisMap& other) const;
  CycloElem operator()(const CycloElem& a) const;

 private:
  int p_;
  std::int64_t c_;
};

CycloElem galois_apply(const GaloisMap& s, const CycloElem& a);

/// Tr_{Q(xi_p)/Q}(a) = (p-1) c_0 - sum_{j>=1} c_j.
Rational trace_Q(const CycloElem& a);

/// Canonical embedding evaluated with `digits` decimal digits.
ComplexApprox embed(const CycloElem& a, int digits = kDefaultDigits);

// Generic scalar helpers so matrix templates work over Q and Q(xi_p) alike.
inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const CycloElem& a) { return a.is_zero(); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline CycloElem zero_like(const CycloElem& a) { return CycloElem(a.p()); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline CycloElem one_like(const CycloElem& a) { return CycloElem::constant(a.p(), 1); }

}  // namespace chowla

namespace Eigen {
template <>
struct NumTraits<chowla::CycloElem> : GenericNumTraits<chowla::CycloElem> {
  using Real = chowla::CycloElem;
  using NonInteger = chowla::CycloElem;
  using Nested = chowla::CycloElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = HugeCost,
    AddCost = HugeCost,
    MulCost = HugeCost
  };
};
}  // namespace Eigen
