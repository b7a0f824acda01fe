#include "chowla/cotsum.hpp"

#include "chowla/arith.hpp"

#include <functional>
#include <stdexcept>

namespace chowla {

CotElement cot_element(int p, std::int64_t m) {
  require_odd_prime(p);
  if (mod(m, p) == 0) throw std::domain_error("cotangent pole");
  std::int64_t mm = mod(m, p);
  CycloElem xm = CycloElem::xi_power(p, mm);
  CycloElem one = CycloElem::constant(p, 1);
  return {p, mm, -((xm + one) * cyclo_inv(xm - one))};
}

CycloElem xk_naive(int p, int k, std::int64_t r) {
  require_odd_prime(p);
  if (k < 1) throw std::invalid_argument("k must be positive");
  double size = 1;
  for (int i = 1; i < k; ++i) size *= p;
  if (size > 1e7) throw std::length_error("oracle too large");
  const std::int64_t target = mod(r, p);
  if (target == 0) return CycloElem(p);

  std::vector<CycloElem> cot(p);
  for (int m = 1; m < p; ++m) cot[m] = cot_element(p, m).value;

  CycloElem total(p);
  // Enumerate m_1..m_{k-1} freely; m_k is forced by the product condition.
  std::function<void(int, std::int64_t, const CycloElem&)> walk =
      [&](int depth, std::int64_t prod, const CycloElem& acc) {
        if (depth == k - 1) {
          std::int64_t last = target * mod_inv(prod, p) % p;
          total += acc * cot[last];
          return;
        }
        for (int m = 1; m < p; ++m) walk(depth + 1, prod * m % p, acc * cot[m]);
      };
  walk(0, 1, CycloElem::constant(p, 1));

  Rational scale = 1;
  for (int i = 0; i < k; ++i) scale /= p;
  return total * scale;
}

XkTable::XkTable(int p, int k, std::int64_t generator, std::vector<CycloElem> z)
    : p_(p), k_(k), g_(generator), z_(std::move(z)) {
  if (z_.size() != static_cast<std::size_t>(p - 1)) {
    throw std::invalid_argument("XkTable: expected p-1 values");
  }
}

const CycloElem& XkTable::z(std::int64_t r) const {
  std::int64_t rr = mod(r, p_);
  if (rr == 0) throw std::domain_error("residue must be coprime to p");
  return z_[rr - 1];
}

CycloElem XkTable::z_or_zero(std::int64_t r) const {
  return mod(r, p_) == 0 ? CycloElem(p_) : z(r);
}

XkTable xk_table(int p, int k) {
  require_odd_prime(p);
  if (k < 1) throw std::invalid_argument("k must be positive");
  const std::int64_t g = primitive_root(p);
  DiscreteLog dlog(p, g);
  const int n = p - 1;

  std::vector<CycloElem> a(n);
  const Rational inv_p(1, p);
  for (int j = 0; j < n; ++j) a[j] = cot_element(p, dlog.power(j)).value * inv_p;

  std::vector<CycloElem> b = a;
  for (int round = 1; round < k; ++round) {
    std::vector<CycloElem> c(n, CycloElem(p));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) c[(i + j) % n] += b[i] * a[j];
    }
    b = std::move(c);
  }

  std::vector<CycloElem> z(n);
  for (int j = 0; j < n; ++j) z[dlog.power(j) - 1] = std::move(b[j]);
  return XkTable(p, k, g, std::move(z));
}

Real xk_float(const XkTable& table, std::int64_t r, int digits) {
  ComplexApprox v = embed(table.z(r), digits) * i_power(-table.k(), digits);
  PrecisionScope scope(digits);
  Real floor = bmp::pow(Real(10), -(digits - 10));
  if (bmp::abs(v.im) > floor) throw std::runtime_error("realness violation");
  return v.re;
}

Rational trace_xk(const XkTable& table, std::int64_t r) {
  Rational t = trace_Q(table.z(r));
  if (table.k() % 2 != 0) return t;
  Rational half = t / 2;
  return (table.k() / 2) % 2 == 0 ? half : -half;
}

Rational trace_closed_form(int p, int k, std::int64_t r, const Integer& h) {
  if (k % 2 != 0) throw std::invalid_argument("trace closed form needs even k");
  // h(-3) = 1 but Q(sqrt(-3)) has six units, so L(1, (./3)) = pi/(3 sqrt 3).
  if (p <= 3 || p % 4 != 3 || gcd(k, p - 1) != 2) {
    throw std::invalid_argument("trace closed form needs gcd(k,p-1) = 2 and 3 < p = 3 mod 4");
  }
  Rational value = legendre(r, p);
  value *= bmp::pow(Integer(2), k - 1);
  value *= bmp::pow(h, k);
  value /= bmp::pow(Integer(p), k / 2);
  return value;
}

}  // namespace chowla
