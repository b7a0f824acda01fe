#pragma once

// Divisor functions d_k(n) and adaptively truncated Dirichlet sums
// sum_{n<=X} d_k(n) w(n mod p) / n with periodic weights.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace chowla {

/// d_k(n) for 1 <= n <= N; values[0] is unused.
struct DivisorTable {
  int k = 1;
  std::uint64_t N = 0;
  std::vector<std::uint64_t> values;

  std::uint64_t at(std::uint64_t n) const { return values.at(n); }
};

/// k-1 rounds of d_{j+1} = d_j * 1.
DivisorTable dk_sieve(int k, std::uint64_t N);

/// d_k(n) for lo <= n < hi via a segmented factorization sieve.
std::vector<std::uint64_t> dk_segment(int k, std::uint64_t lo, std::uint64_t hi);

struct SeriesEstimate {
  double estimate = 0;     // block-averaged partial sum at X
  double tolerance = 0;    // |estimate(X) - estimate(X/2)|
  std::uint64_t X = 0;     // final truncation point
  double partial_sum = 0;  // plain partial sum at X
  bool converged = false;
};

class SlowConvergence : public std::runtime_error {
 public:
  explicit SlowConvergence(SeriesEstimate partial)
      : std::runtime_error("slow convergence"), partial_(partial) {}
  const SeriesEstimate& partial() const { return partial_; }

 private:
  SeriesEstimate partial_;
};

inline constexpr std::uint64_t kSeriesMaxX = 100'000'000;

/// Sum of d_k(n) weight[n mod p] / n with adaptive doubling. The estimate at
/// X is the mean of the partial sums S(n) over X/2 < n <= X, which damps
/// the oscillation of S. Doubles X until two successive estimates differ by
/// less than `tol`; throws SlowConvergence past `x_max`. `cache`, if given
/// and of matching k, supplies d_k(n) for n <= cache->N.
SeriesEstimate adaptive_periodic_sum(int k, std::span<const double> weight, std::uint64_t X,
                                     double tol, std::uint64_t x_max = kSeriesMaxX,
                                     const DivisorTable* cache = nullptr);

/// One pass for several weight vectors of the same period. Each entry stops
/// at its own convergence point, so results equal the single-weight calls;
/// entries still open at `x_max` come back with converged = false.
std::vector<SeriesEstimate> adaptive_periodic_sums(int k, const std::vector<std::vector<double>>& weights,
                                                   std::uint64_t X, double tol,
                                                   std::uint64_t x_max = kSeriesMaxX,
                                                   const DivisorTable* cache = nullptr);

}  // namespace chowla
