#include "chowla/analytics.hpp"

#include "chowla/arith.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace chowla {

SeriesEstimate truncated_congruence_sum(int p, int k, std::int64_t r, std::uint64_t X, double tol,
                                        const DivisorTable* cache) {
  require_odd_prime(p);
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (mod(r, p) == 0) throw std::invalid_argument("r must be coprime to p");
  if (X < 1000) throw std::invalid_argument("series truncation X must be >= 1000");
  // n < 0 with n = r contributes -d_k(|n|)/|n| at |n| = -r.
  std::vector<double> weight(p, 0.0);
  weight[mod(r, p)] += 1;
  weight[mod(-r, p)] -= 1;
  return adaptive_periodic_sum(k, weight, X, tol, kSeriesMaxX, cache);
}

double pass_tolerance(int k) { return k <= 2 ? 1e-3 : 1e-2; }

PassReport verify_pass(const XkTable& table, std::int64_t r, std::uint64_t X, int digits,
                       const DivisorTable* cache) {
  PassReport rep;
  rep.p = table.p();
  rep.k = table.k();
  rep.r = mod(r, table.p());
  rep.tolerance = pass_tolerance(rep.k);
  {
    PrecisionScope scope(digits);
    Real value = 2 * bmp::pow(pi_real() / 2, rep.k) * xk_float(table, r, digits);
    rep.expected = value.convert_to<double>();
  }
  try {
    rep.series = truncated_congruence_sum(rep.p, rep.k, r, X, rep.tolerance, cache);
    rep.converged = true;
  } catch (const SlowConvergence& e) {
    rep.series = e.partial();
    rep.converged = false;
  }
  rep.deviation = std::abs(rep.series.estimate - rep.expected);
  rep.pass = rep.deviation < rep.tolerance;
  return rep;
}

PassReport verify_pass(int p, int k, std::int64_t r, std::uint64_t X, int digits) {
  return verify_pass(xk_table(p, k), r, X, digits);
}

Rational moment_lhs(const XkTable& table, int m) {
  if (m < 1) throw std::invalid_argument("moment exponent must be positive");
  if (m % 2 != 0) return 0;
  const int p = table.p();
  // z_k(-r) = -z_k(r), so the even moment is twice the half sum.
  CycloElem total(p);
  for (int r = 1; r <= (p - 1) / 2; ++r) {
    const CycloElem& z = table.z(r);
    CycloElem zm = z;
    for (int e = 1; e < m; ++e) zm = zm * z;
    total += zm;
  }
  if (!total.is_rational()) throw std::logic_error("moment sum is not rational");
  Rational value = 2 * total.rational_value();
  const std::int64_t half_km = static_cast<std::int64_t>(table.k()) * m / 2;
  return half_km % 2 == 0 ? value : Rational(-value);
}

Rational moment_lhs(int p, int k, int m) {
  if (m % 2 != 0) {
    require_odd_prime(p);
    if (m < 1) throw std::invalid_argument("moment exponent must be positive");
    return 0;
  }
  return moment_lhs(xk_table(p, k), m);
}

namespace {

// m * int_N^inf (1 + log x)^(K-1) x^(-m) dx, via
// int_a^inf (1+u)^n e^(-c u) du = e^(-c a) sum_j n!/(n-j)! (1+a)^(n-j) / c^(j+1).
double partial_summation_tail(std::uint64_t N, double K, int m) {
  const double a = std::log(static_cast<double>(N));
  const double c = m - 1;
  const int n = static_cast<int>(K) - 1;
  double total = 0;
  for (int j = 0; j <= n; ++j) {
    double log_term = std::lgamma(n + 1.0) - std::lgamma(n - j + 1.0) + (n - j) * std::log1p(a) -
                      (j + 1) * std::log(c) - c * a;
    total += std::exp(log_term);
  }
  return m * total;
}

}  // namespace

MomentConstant moment_rhs_constant(int k, int m, std::uint64_t N) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("moment constant needs even m >= 2");
  if (N < 1000) throw std::invalid_argument("moment constant needs N >= 1000");
  DivisorTable d = dk_sieve(k, N);
  long double sum = 0;
  for (std::uint64_t n = N; n >= 1; --n) {
    sum += std::pow(static_cast<long double>(d.values[n]) / static_cast<long double>(n), m);
  }
  const long double scale =
      std::pow(std::pow(2.0L, k - 1) / std::pow(std::numbers::pi_v<long double>, k), m);
  MomentConstant out;
  out.k = k;
  out.m = m;
  out.N = N;
  out.constant = static_cast<double>(scale * sum);
  out.doubled = 2 * out.constant;
  const double K = std::pow(static_cast<double>(k), m);
  out.tail_bound = k == 1 ? static_cast<double>(2 * scale / ((m - 1) * std::pow(static_cast<long double>(N), m - 1)))
                          : static_cast<double>(2 * scale) * partial_summation_tail(N, K, m);
  if (!std::isfinite(out.tail_bound)) out.tail_bound = std::numeric_limits<double>::infinity();
  return out;
}

MomentReport moment_report(const XkTable& table, int m, const MomentConstant& rhs) {
  if (m % 2 != 0) throw std::invalid_argument("moment report needs even m");
  if (rhs.k != table.k() || rhs.m != m) throw std::invalid_argument("moment constant mismatch");
  MomentReport rep;
  rep.p = table.p();
  rep.k = table.k();
  rep.m = m;
  rep.lhs = moment_lhs(table, m);
  rep.lhs_float = rep.lhs.convert_to<double>();
  rep.rhs_constant = rhs.constant;
  rep.rhs_doubled = rhs.doubled;
  rep.deviation = std::abs(rep.lhs_float - rep.rhs_doubled);
  rep.bound = 4.0 / std::pow(static_cast<double>(rep.p), 0.9);
  rep.pass = rep.deviation < rep.bound;
  return rep;
}

MomentReport moment_report(int p, int k, int m) {
  if (m % 2 != 0) throw std::invalid_argument("moment report needs even m");
  return moment_report(xk_table(p, k), m, moment_rhs_constant(k, m));
}

}  // namespace chowla
