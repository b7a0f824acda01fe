#pragma once

// Dirichlet characters modulo p, L(1, chi), and three independent routes to
// D_k(1, f) for odd p-periodic f.

#include "chowla/arith.hpp"
#include "chowla/cotsum.hpp"
#include "chowla/divisor.hpp"
#include "chowla/exactalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace chowla {

/// Characters chi_j with chi_j(g) = e^(2 pi i j/(p-1)), evaluated numerically.
class CharacterTable {
 public:
  /// `generator` defaults to the smallest primitive root.
  explicit CharacterTable(int p, int digits = kDefaultDigits, std::int64_t generator = 0);

  int p() const { return p_; }
  int digits() const { return digits_; }
  std::int64_t generator() const { return dlog_.generator(); }
  const DiscreteLog& dlog() const { return dlog_; }
  /// Number of characters, p - 1.
  int size() const { return p_ - 1; }
  static bool is_odd(int j) { return j % 2 != 0; }

  /// chi_j(a); zero when p | a.
  ComplexApprox value(int j, std::int64_t a) const;

 private:
  int p_;
  int digits_;
  DiscreteLog dlog_;
  std::vector<ComplexApprox> roots_;  // e^(2 pi i e/(p-1))
};

/// Odd p-periodic rational function given by f(1..(p-1)/2).
class OddPeriodicFunction {
 public:
  OddPeriodicFunction(int p, std::vector<Rational> values);

  int p() const { return p_; }
  const std::vector<Rational>& values() const { return values_; }
  /// f(n) for any integer n (f(0) = 0, f(-n) = -f(n)).
  Rational operator()(std::int64_t n) const;

 private:
  int p_;
  std::vector<Rational> values_;
};

/// L(1, chi_j) = (pi/2p) sum chi_j(m) cot(pi m/p) for odd j.
ComplexApprox l1_odd(const CharacterTable& tbl, int j, int digits = kDefaultDigits);

/// L(1, chi_j) = -(tau(chi)/p) sum conj(chi)(a) log(2 sin(pi a/p)) for even j != 0.
ComplexApprox l1_even(const CharacterTable& tbl, int j, int digits = kDefaultDigits);

/// c_chi(f) = sum_{r mod p} f(r) conj(chi_j)(r).
ComplexApprox character_coefficient(const OddPeriodicFunction& f, const CharacterTable& tbl, int j);

struct DkValue {
  Real value;
  CycloElem exact;  // sum_{r <= (p-1)/2} f(r) z_k(r)
  bool exact_zero = false;
};

/// 2 (pi/2)^k sum f(r) x_k(r;p); vanishing is decided on the exact sum.
DkValue dk1_via_xk(const OddPeriodicFunction& f, const XkTable& table, int digits = kDefaultDigits);

/// (1/phi(p)) sum_{chi != chi_0} c_chi(f) L(1, chi)^k.
ComplexApprox dk1_via_characters(const OddPeriodicFunction& f, int k, int digits = kDefaultDigits);

inline constexpr std::uint64_t kSeriesDefaultX = 1'000'000;
inline constexpr double kSeriesDefaultTol = 1e-3;

/// sum_{n<=X} d_k(n) f(n)/n with adaptive doubling from X.
SeriesEstimate dk1_series(const OddPeriodicFunction& f, int k, std::uint64_t X = kSeriesDefaultX,
                          double tol = kSeriesDefaultTol, const DivisorTable* cache = nullptr);

/// dk1_series for several f of one modulus in a single pass; no throw, an
/// entry that missed the tolerance has converged = false.
std::vector<SeriesEstimate> dk1_series_batch(const std::vector<OddPeriodicFunction>& fs, int k,
                                             std::uint64_t X = kSeriesDefaultX, double tol = kSeriesDefaultTol,
                                             const DivisorTable* cache = nullptr);

}  // namespace chowla
