#pragma once

// Exact rational linear algebra for V_0 = { f odd : D_k(1, f) = 0 }.

#include "chowla/cotsum.hpp"
#include "chowla/exactalg.hpp"
#include "chowla/lseries.hpp"

#include <Eigen/Core>

#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace chowla {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = std::vector<Rational>;

/// Pivot row selection for elimination. Both give identical ranks and
/// reduced forms; having two lets callers cross-check basis independence.
enum class PivotOrder { FirstNonzero, SmallestMagnitude };

struct Echelon {
  IntegerMatrix rows;        // fraction-free row echelon form
  std::vector<int> pivots;   // pivot column of each nonzero row
};

/// Bareiss elimination of a rational matrix after clearing row denominators.
Echelon fraction_free_echelon(const RationalMatrix& a, PivotOrder order = PivotOrder::FirstNonzero);

int rank(const RationalMatrix& a, PivotOrder order = PivotOrder::FirstNonzero);

/// Reduced row echelon form (leading entries 1).
RationalMatrix rref(const RationalMatrix& a, PivotOrder order = PivotOrder::FirstNonzero);

/// Basis of { x : a x = 0 } in reduced echelon normal form.
std::vector<RationalVector> nullspace(const RationalMatrix& a,
                                      PivotOrder order = PivotOrder::FirstNonzero);

/// Power-basis coordinates: column j holds the p-1 coordinates of values[j].
RationalMatrix coordinate_matrix(std::span<const CycloElem> values);

/// Rank over Q of a list of elements of Q(xi_p); 0 for an empty list.
int rank_over_Q(std::span<const CycloElem> values);

/// Scales v to coprime integers with a positive leading entry.
RationalVector integer_normalized(const RationalVector& v);

struct KernelBasis {
  int p = 0;
  int k = 0;
  int dimV = 0;
  std::vector<OddPeriodicFunction> basis;  // reduced echelon normal form

  int dim() const { return static_cast<int>(basis.size()); }
  /// Exact membership of f(1..(p-1)/2) in the span.
  bool contains(const RationalVector& f) const;
};

KernelBasis v0_kernel(const XkTable& table, PivotOrder order = PivotOrder::FirstNonzero);
KernelBasis v0_kernel(int p, int k);

/// Lower bound for dim V_0; throws "formula inconsistency" if non-integral.
int dim_bound(int p, int k);

enum class DimCase { EqualityProven, BoundOnly };
std::string_view to_string(DimCase c);
/// EQUALITY-PROVEN iff gcd(k,p-1) <= 2, or gcd = 4 and p = 5 mod 8.
DimCase dim_case(int p, int k);

class TheoremViolation : public std::logic_error {
 public:
  explicit TheoremViolation(const std::string& what) : std::logic_error("theorem violation: " + what) {}
};

struct DimReport {
  int p = 0;
  int k = 0;
  int dim = 0;
  int bound = 0;
  DimCase dim_case = DimCase::BoundOnly;
  KernelBasis kernel;
};

/// Throws TheoremViolation if dim < bound, or dim != bound where equality is proven.
DimReport verify_dim(const XkTable& table);
DimReport verify_dim(int p, int k);

/// {z_k(r) : r <= (p-1)/2} is independent over Q iff gcd(k,p-1) = 1, or
/// gcd = 2 with p = 3 mod 4.
bool full_rank_predicted(int p, int k);

enum class ResidueClass { QR, QNR };

struct SubsetRank {
  int rank = 0;
  int size = 0;
  bool hypothesis = false;  // false: OBSERVED-ONLY
};

/// gcd(k,p-1) = 2 with p = 1 mod 4, or gcd = 4 with p = 5 mod 8.
bool subset_hypothesis(int p, int k);

/// Rank of { z_k(r) : r <= (p-1)/2, (r/p) = +-1 }.
SubsetRank subset_rank(const XkTable& table, ResidueClass cls);
SubsetRank subset_rank(int p, int k, ResidueClass cls);

/// True iff no nonzero kernel element is supported only on QR or only on QNR.
bool qr_support_check(const XkTable& table);
bool qr_support_check(int p, int k);

}  // namespace chowla
