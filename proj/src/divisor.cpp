#include "chowla/divisor.hpp"

#include <algorithm>
#include <cmath>

namespace chowla {

namespace {

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

// d_k(q^a) = C(a + k - 1, k - 1).
std::uint64_t prime_power_count(int k, int a) {
  std::uint64_t c = 1;
  for (int i = 1; i <= a; ++i) c = c * static_cast<std::uint64_t>(k - 1 + i) / i;
  return c;
}

void fill_divisors(int k, std::uint64_t lo, std::uint64_t hi, const DivisorTable* cache,
                   std::vector<std::uint64_t>& out) {
  if (cache != nullptr && cache->k == k && hi - 1 <= cache->N) {
    out.assign(cache->values.begin() + lo, cache->values.begin() + hi);
    return;
  }
  out = dk_segment(k, lo, hi);
}

}  // namespace

DivisorTable dk_sieve(int k, std::uint64_t N) {
  if (k < 1 || N < 1) throw std::invalid_argument("dk_sieve: need k >= 1 and N >= 1");
  DivisorTable t{k, N, std::vector<std::uint64_t>(N + 1, 1)};
  t.values[0] = 0;
  for (int round = 1; round < k; ++round) {
    std::vector<std::uint64_t> next(N + 1, 0);
    for (std::uint64_t d = 1; d <= N; ++d) {
      const std::uint64_t v = t.values[d];
      for (std::uint64_t m = d; m <= N; m += d) next[m] += v;
    }
    t.values = std::move(next);
  }
  return t;
}

std::vector<std::uint64_t> dk_segment(int k, std::uint64_t lo, std::uint64_t hi) {
  if (k < 1 || lo < 1 || hi < lo) throw std::invalid_argument("dk_segment: bad range");
  const std::size_t len = hi - lo;
  std::vector<std::uint64_t> val(len, 1), rest(len);
  for (std::size_t i = 0; i < len; ++i) rest[i] = lo + i;
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
  for (std::uint64_t q : small_primes(root)) {
    std::uint64_t first = (lo + q - 1) / q * q;
    for (std::uint64_t n = first; n < hi; n += q) {
      std::size_t i = n - lo;
      int a = 0;
      while (rest[i] % q == 0) {
        rest[i] /= q;
        ++a;
      }
      val[i] *= prime_power_count(k, a);
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (rest[i] > 1) val[i] *= static_cast<std::uint64_t>(k);
  }
  return val;
}

std::vector<SeriesEstimate> adaptive_periodic_sums(int k, const std::vector<std::vector<double>>& weights,
                                                   std::uint64_t X, double tol, std::uint64_t x_max,
                                                   const DivisorTable* cache) {
  if (weights.empty()) return {};
  const std::uint64_t p = weights.front().size();
  if (p == 0) throw std::invalid_argument("adaptive_periodic_sum: empty weight");
  for (const auto& w : weights) {
    if (w.size() != p) throw std::invalid_argument("adaptive_periodic_sum: period mismatch");
  }
  if (X < 2) throw std::invalid_argument("adaptive_periodic_sum: X too small");
  constexpr std::uint64_t kSegment = 1 << 18;
  const std::size_t W = weights.size();

  // Residue-major weight layout so the inner loop is contiguous.
  std::vector<double> by_residue(p * W);
  for (std::size_t w = 0; w < W; ++w) {
    for (std::uint64_t r = 0; r < p; ++r) by_residue[r * W + w] = weights[w][r];
  }

  std::vector<long double> partial(W, 0), window_sum(W, 0);
  std::vector<double> previous(W, 0);
  std::vector<bool> done(W, false);
  std::vector<SeriesEstimate> results(W);
  std::size_t open = W;
  std::uint64_t window_start = X / 2 + 1;
  std::uint64_t target = X;
  bool have_previous = false;

  std::vector<std::uint64_t> dk;
  std::uint64_t n = 1;
  while (true) {
    const std::uint64_t hi = std::min(target, n + kSegment - 1) + 1;
    fill_divisors(k, n, hi, cache, dk);
    for (std::uint64_t m = n; m < hi; ++m) {
      const long double scale = static_cast<long double>(dk[m - n]) / static_cast<long double>(m);
      const double* w = &by_residue[(m % p) * W];
      const bool in_window = m >= window_start;
      for (std::size_t i = 0; i < W; ++i) {
        if (w[i] != 0) partial[i] += scale * w[i];
        if (in_window) window_sum[i] += partial[i];
      }
    }
    n = hi;
    if (n <= target) continue;

    for (std::size_t i = 0; i < W; ++i) {
      if (done[i]) continue;
      const double estimate = static_cast<double>(window_sum[i] / (target - window_start + 1));
      SeriesEstimate& r = results[i];
      r.estimate = estimate;
      r.partial_sum = static_cast<double>(partial[i]);
      r.X = target;
      r.tolerance = have_previous ? std::abs(estimate - previous[i]) : INFINITY;
      if (have_previous && r.tolerance < tol) {
        r.converged = true;
        done[i] = true;
        --open;
      }
      previous[i] = estimate;
    }
    if (open == 0 || target * 2 > x_max) return results;
    have_previous = true;
    window_start = target + 1;
    std::fill(window_sum.begin(), window_sum.end(), 0);
    target *= 2;
  }
}

SeriesEstimate adaptive_periodic_sum(int k, std::span<const double> weight, std::uint64_t X,
                                     double tol, std::uint64_t x_max, const DivisorTable* cache) {
  if (weight.empty()) throw std::invalid_argument("adaptive_periodic_sum: empty weight");
  auto results = adaptive_periodic_sums(k, {std::vector<double>(weight.begin(), weight.end())}, X, tol, x_max, cache);
  if (!results.front().converged) throw SlowConvergence(results.front());
  return results.front();
}

}  // namespace chowla
