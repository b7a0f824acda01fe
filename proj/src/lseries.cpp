#include "chowla/lseries.hpp"

#include <stdexcept>

namespace chowla {

CharacterTable::CharacterTable(int p, int digits, std::int64_t generator)
    : p_(p), digits_(digits), dlog_(p, generator == 0 ? primitive_root(p) : generator) {
  require_odd_prime(p);
  roots_.reserve(p - 1);
  for (int e = 0; e < p - 1; ++e) roots_.push_back(unit_root(e, p - 1, digits));
}

ComplexApprox CharacterTable::value(int j, std::int64_t a) const {
  if (mod(a, p_) == 0) {
    PrecisionScope scope(digits_);
    return {Real(0), Real(0), digits_};
  }
  std::int64_t e = mod(static_cast<std::int64_t>(j) * dlog_.log(a), p_ - 1);
  return roots_[e];
}

OddPeriodicFunction::OddPeriodicFunction(int p, std::vector<Rational> values)
    : p_(p), values_(std::move(values)) {
  require_odd_prime(p);
  if (values_.size() != static_cast<std::size_t>((p - 1) / 2)) {
    throw std::invalid_argument("odd function needs (p-1)/2 values");
  }
}

Rational OddPeriodicFunction::operator()(std::int64_t n) const {
  std::int64_t r = mod(n, p_);
  if (r == 0) return 0;
  if (r <= (p_ - 1) / 2) return values_[r - 1];
  return -values_[p_ - r - 1];
}

ComplexApprox l1_odd(const CharacterTable& tbl, int j, int digits) {
  if (!CharacterTable::is_odd(j)) throw std::invalid_argument("even character: formula yields zero");
  PrecisionScope scope(digits);
  const int p = tbl.p();
  const Real pi = pi_real();
  ComplexApprox sum(Real(0), Real(0), digits);
  for (int m = 1; m < p; ++m) {
    Real c = 1 / bmp::tan(pi * m / p);
    sum += c * tbl.value(j, m);
  }
  return (pi / (2 * p)) * sum;
}

ComplexApprox l1_even(const CharacterTable& tbl, int j, int digits) {
  if (CharacterTable::is_odd(j)) throw std::invalid_argument("odd character: use l1_odd");
  if (j % tbl.size() == 0) throw std::invalid_argument("principal character pole at s=1");
  PrecisionScope scope(digits);
  const int p = tbl.p();
  const Real pi = pi_real();
  ComplexApprox gauss(Real(0), Real(0), digits);
  ComplexApprox logs(Real(0), Real(0), digits);
  for (int m = 1; m < p; ++m) {
    gauss += tbl.value(j, m) * unit_root(m, p, digits);
    Real l = bmp::log(2 * bmp::sin(pi * m / p));
    logs += l * tbl.value(j, m).conj();
  }
  return (Real(-1) / p) * (gauss * logs);
}

ComplexApprox character_coefficient(const OddPeriodicFunction& f, const CharacterTable& tbl, int j) {
  PrecisionScope scope(tbl.digits());
  ComplexApprox c(Real(0), Real(0), tbl.digits());
  for (int r = 1; r < f.p(); ++r) {
    Rational fr = f(r);
    if (fr == 0) continue;
    c += Real(fr) * tbl.value(j, r).conj();
  }
  return c;
}

DkValue dk1_via_xk(const OddPeriodicFunction& f, const XkTable& table, int digits) {
  if (f.p() != table.p()) throw std::invalid_argument("modulus mismatch");
  const int p = f.p();
  CycloElem exact(p);
  for (int r = 1; r <= (p - 1) / 2; ++r) {
    if (f.values()[r - 1] != 0) exact += table.z(r) * f.values()[r - 1];
  }
  // sum f(r) x_k(r) = i^(-k) * exact, which is real.
  ComplexApprox e = embed(exact, digits) * i_power(-table.k(), digits);
  PrecisionScope scope(digits);
  Real scale = 2 * bmp::pow(pi_real() / 2, table.k());
  DkValue out{scale * e.re, exact, exact.is_zero()};
  if (out.exact_zero) out.value = 0;
  return out;
}

ComplexApprox dk1_via_characters(const OddPeriodicFunction& f, int k, int digits) {
  CharacterTable tbl(f.p(), digits);
  PrecisionScope scope(digits);
  const Real floor = bmp::pow(Real(10), -(digits - 10));
  ComplexApprox total(Real(0), Real(0), digits);
  for (int j = 1; j < tbl.size(); ++j) {
    ComplexApprox c = character_coefficient(f, tbl, j);
    if (!CharacterTable::is_odd(j)) {
      if (c.abs() > floor) throw std::logic_error("odd function has an even character component");
      continue;
    }
    total += c * cpow(l1_odd(tbl, j, digits), k);
  }
  return (Real(1) / tbl.size()) * total;
}

SeriesEstimate dk1_series(const OddPeriodicFunction& f, int k, std::uint64_t X, double tol,
                          const DivisorTable* cache) {
  if (X < 1000) throw std::invalid_argument("series truncation X must be >= 1000");
  std::vector<double> weight(f.p());
  for (int r = 0; r < f.p(); ++r) weight[r] = f(r).convert_to<double>();
  return adaptive_periodic_sum(k, weight, X, tol, kSeriesMaxX, cache);
}

std::vector<SeriesEstimate> dk1_series_batch(const std::vector<OddPeriodicFunction>& fs, int k, std::uint64_t X,
                                             double tol, const DivisorTable* cache) {
  if (X < 1000) throw std::invalid_argument("series truncation X must be >= 1000");
  if (fs.empty()) return {};
  std::vector<std::vector<double>> weights;
  for (const auto& f : fs) {
    if (f.p() != fs.front().p()) throw std::invalid_argument("modulus mismatch");
    std::vector<double> w(f.p());
    for (int r = 0; r < f.p(); ++r) w[r] = f(r).convert_to<double>();
    weights.push_back(std::move(w));
  }
  return adaptive_periodic_sums(k, weights, X, tol, kSeriesMaxX, cache);
}

}  // namespace chowla
