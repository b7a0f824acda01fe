#pragma once

// Symmetrically truncated congruence series and the even moments of x_k.

#include "chowla/cotsum.hpp"
#include "chowla/divisor.hpp"
#include "chowla/exactalg.hpp"

#include <cstdint>

namespace chowla {

/// sum_{0<|n|<=X, n = r mod p} d_k(|n|)/n, adaptively doubled from X.
SeriesEstimate truncated_congruence_sum(int p, int k, std::int64_t r, std::uint64_t X = 1'000'000,
                                        double tol = 1e-3, const DivisorTable* cache = nullptr);

struct PassReport {
  int p = 0;
  int k = 0;
  std::int64_t r = 0;
  SeriesEstimate series;
  double expected = 0;  // 2 (pi/2)^k x_k(r;p)
  double deviation = 0;
  double tolerance = 0;  // 1e-3 for k <= 2, 1e-2 beyond
  bool converged = false;
  bool pass = false;
};

double pass_tolerance(int k);

/// Series against the finite cotangent value. Slow convergence is reported
/// through `converged`, not thrown.
PassReport verify_pass(const XkTable& table, std::int64_t r, std::uint64_t X = 1'000'000,
                       int digits = kDefaultDigits, const DivisorTable* cache = nullptr);
PassReport verify_pass(int p, int k, std::int64_t r, std::uint64_t X = 1'000'000,
                       int digits = kDefaultDigits);

/// sum_{r=1}^{p-1} x_k(r;p)^m exactly. Zero for odd m; for even m it is
/// (-1)^(km/2) sum_r z_k(r)^m, a Galois-invariant hence rational number.
Rational moment_lhs(const XkTable& table, int m);
Rational moment_lhs(int p, int k, int m);

struct MomentConstant {
  int k = 0;
  int m = 0;
  std::uint64_t N = 0;
  double constant = 0;    // (2^(k-1)/pi^k)^m sum_{n<=N} d_k(n)^m/n^m
  double doubled = 0;     // same over n in Z \ {0}
  double tail_bound = 0;  // bound on the omitted n > N part of `doubled`
};

/// Tail: d_k(n)^m <= d_{k^m}(n) and sum_{n<=x} d_K(n) <= x (1 + log x)^(K-1),
/// then partial summation.
MomentConstant moment_rhs_constant(int k, int m, std::uint64_t N = 1'000'000);

struct MomentReport {
  int p = 0;
  int k = 0;
  int m = 0;
  Rational lhs;
  double lhs_float = 0;
  double rhs_constant = 0;
  double rhs_doubled = 0;
  double deviation = 0;
  double bound = 0;  // 4 / p^0.9
  bool pass = false;
};

/// Needs even m. A miss is reported through `pass`, never thrown.
MomentReport moment_report(const XkTable& table, int m, const MomentConstant& rhs);
MomentReport moment_report(int p, int k, int m);

}  // namespace chowla
