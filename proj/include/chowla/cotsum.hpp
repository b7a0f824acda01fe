#pragma once

// The cotangent-product sums x_k(r;p), held exactly as
// z_k(r) = i^k x_k(r;p) in Q(xi_p).

#include "chowla/exactalg.hpp"

#include <cstdint>
#include <vector>

namespace chowla {

/// i*cot(pi m/p) = -(xi^m + 1)/(xi^m - 1) as an element of Q(xi_p).
struct CotElement {
  int p = 0;
  std::int64_t m = 0;
  CycloElem value;
};

CotElement cot_element(int p, std::int64_t m);

/// Brute-force enumeration over all k-tuples (m_1..m_k) with prod = r.
/// Testing oracle only; refuses instances with p^(k-1) > 10^7.
CycloElem xk_naive(int p, int k, std::int64_t r);

/// All z_k(r) = i^k x_k(r;p), r = 1..p-1, for a fixed (p, k).
class XkTable {
 public:
  XkTable(int p, int k, std::int64_t generator, std::vector<CycloElem> z);

  int p() const { return p_; }
  int k() const { return k_; }
  /// Primitive root used to index the convolution.
  std::int64_t generator() const { return g_; }
  /// z_k(r); r is reduced mod p and must be coprime to it.
  const CycloElem& z(std::int64_t r) const;
  /// Conductor-wise zero when r = 0 mod p (the defining sum is empty).
  CycloElem z_or_zero(std::int64_t r) const;

 private:
  int p_;
  int k_;
  std::int64_t g_;
  std::vector<CycloElem> z_;  // index r - 1
};

/// k-1 cyclic convolutions over (Z/pZ)^* indexed by discrete logs.
XkTable xk_table(int p, int k);

/// Real value x_k(r;p) = i^(-k) embed(z_k(r)); throws "realness violation"
/// if the imaginary residue exceeds 10^-(digits-10).
Real xk_float(const XkTable& table, std::int64_t r, int digits = kDefaultDigits);

/// Tr_{Q(xi_p)/Q}(i^k x_k(r;p)) for odd k (always 0); for even k, the trace
/// Tr_{Q(xi_p)^+/Q}(x_k(r;p)) = (-1)^(k/2) Tr_{Q(xi_p)/Q}(z_k(r)) / 2.
Rational trace_xk(const XkTable& table, std::int64_t r);

/// 2^(k-1) (r/p) h^k p^(-k/2), the closed form for gcd(k,p-1) = 2 and
/// 3 < p = 3 mod 4 given h = h(-p).
Rational trace_closed_form(int p, int k, std::int64_t r, const Integer& h);

}  // namespace chowla
