#include "chowla/vanish.hpp"

#include "chowla/arith.hpp"

namespace chowla {

namespace {

IntegerMatrix clear_denominators(const RationalMatrix& a) {
  IntegerMatrix m(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < a.cols(); ++j) l = bmp::lcm(l, Integer(bmp::denominator(a(i, j))));
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      m(i, j) = bmp::numerator(a(i, j)) * (l / bmp::denominator(a(i, j)));
    }
  }
  return m;
}

Eigen::Index choose_pivot(const IntegerMatrix& m, Eigen::Index from, Eigen::Index col, PivotOrder order) {
  Eigen::Index best = -1;
  for (Eigen::Index i = from; i < m.rows(); ++i) {
    if (m(i, col) == 0) continue;
    if (order == PivotOrder::FirstNonzero) return i;
    if (best < 0 || bmp::abs(m(i, col)) < bmp::abs(m(best, col))) best = i;
  }
  return best;
}

std::vector<int> columns_where(int p, int sign) {
  std::vector<int> cols;
  for (int r = 1; r <= (p - 1) / 2; ++r) {
    if (legendre(r, p) == sign) cols.push_back(r);
  }
  return cols;
}

std::vector<CycloElem> half_values(const XkTable& table, const std::vector<int>& residues) {
  std::vector<CycloElem> values;
  values.reserve(residues.size());
  for (int r : residues) values.push_back(table.z(r));
  return values;
}

}  // namespace

Echelon fraction_free_echelon(const RationalMatrix& a, PivotOrder order) {
  IntegerMatrix m = clear_denominators(a);
  std::vector<int> pivots;
  Integer prev = 1;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = choose_pivot(m, row, col, order);
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    for (Eigen::Index i = row + 1; i < m.rows(); ++i) {
      for (Eigen::Index j = col + 1; j < m.cols(); ++j) {
        Integer num = m(row, col) * m(i, j) - m(i, col) * m(row, j);
        Integer q, r;
        bmp::divide_qr(num, prev, q, r);
        if (r != 0) throw std::logic_error("fraction-free elimination: inexact division");
        m(i, j) = q;
      }
      m(i, col) = 0;
    }
    prev = m(row, col);
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

int rank(const RationalMatrix& a, PivotOrder order) {
  if (a.size() == 0) return 0;
  return static_cast<int>(fraction_free_echelon(a, order).pivots.size());
}

RationalMatrix rref(const RationalMatrix& a, PivotOrder order) {
  RationalMatrix out = RationalMatrix::Constant(a.rows(), a.cols(), Rational(0));
  if (a.size() == 0) return out;
  Echelon e = fraction_free_echelon(a, order);
  const auto rk = static_cast<Eigen::Index>(e.pivots.size());
  for (Eigen::Index i = 0; i < rk; ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = Rational(e.rows(i, j));
  }
  // Back substitution: normalize each pivot row, clear its column above.
  for (Eigen::Index i = rk - 1; i >= 0; --i) {
    const int pc = e.pivots[i];
    Rational lead = out(i, pc);
    for (Eigen::Index j = pc; j < a.cols(); ++j) out(i, j) /= lead;
    for (Eigen::Index r = 0; r < i; ++r) {
      Rational f = out(r, pc);
      if (f == 0) continue;
      for (Eigen::Index j = pc; j < a.cols(); ++j) out(r, j) -= f * out(i, j);
    }
  }
  return out;
}

std::vector<RationalVector> nullspace(const RationalMatrix& a, PivotOrder order) {
  const auto n = a.cols();
  if (n == 0) return {};
  std::vector<RationalVector> raw;
  if (a.rows() == 0) {
    for (Eigen::Index f = 0; f < n; ++f) {
      RationalVector v(n, Rational(0));
      v[f] = 1;
      raw.push_back(std::move(v));
    }
  } else {
    RationalMatrix r = rref(a, order);
    std::vector<int> pivots;
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (r(i, j) != 0) {
          pivots.push_back(static_cast<int>(j));
          break;
        }
      }
    }
    std::vector<bool> is_pivot(n, false);
    for (int pc : pivots) is_pivot[pc] = true;
    for (Eigen::Index f = 0; f < n; ++f) {
      if (is_pivot[f]) continue;
      RationalVector v(n, Rational(0));
      v[f] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
      raw.push_back(std::move(v));
    }
  }
  if (raw.empty()) return {};
  // Canonical form: reduced echelon form of the basis itself.
  RationalMatrix b(static_cast<Eigen::Index>(raw.size()), n);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (Eigen::Index j = 0; j < n; ++j) b(i, j) = raw[i][j];
  }
  RationalMatrix rb = rref(b, PivotOrder::FirstNonzero);
  std::vector<RationalVector> basis;
  for (Eigen::Index i = 0; i < rb.rows(); ++i) {
    RationalVector v(n);
    for (Eigen::Index j = 0; j < n; ++j) v[j] = rb(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix coordinate_matrix(std::span<const CycloElem> values) {
  if (values.empty()) return RationalMatrix(0, 0);
  const int p = values.front().p();
  RationalMatrix m(p - 1, static_cast<Eigen::Index>(values.size()));
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j].p() != p) throw std::invalid_argument("conductor mismatch");
    for (int i = 0; i < p - 1; ++i) m(i, static_cast<Eigen::Index>(j)) = values[j].coeffs()[i];
  }
  return m;
}

int rank_over_Q(std::span<const CycloElem> values) {
  if (values.empty()) return 0;
  return rank(coordinate_matrix(values));
}

RationalVector integer_normalized(const RationalVector& v) {
  Integer l = 1;
  for (const auto& q : v) l = bmp::lcm(l, Integer(bmp::denominator(q)));
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& q : v) {
    ints.push_back(bmp::numerator(q) * (l / bmp::denominator(q)));
    g = bmp::gcd(g, ints.back());
  }
  if (g == 0) return v;
  int sign = 1;
  for (const auto& x : ints) {
    if (x != 0) {
      sign = x < 0 ? -1 : 1;
      break;
    }
  }
  RationalVector out;
  for (const auto& x : ints) out.emplace_back(Rational(x / g * sign));
  return out;
}

bool KernelBasis::contains(const RationalVector& f) const {
  if (f.size() != static_cast<std::size_t>(dimV)) throw std::invalid_argument("dimension mismatch");
  RationalMatrix m(dim() + 1, dimV);
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dimV; ++j) m(i, j) = basis[i].values()[j];
  }
  for (int j = 0; j < dimV; ++j) m(dim(), j) = f[j];
  return rank(m) == dim();
}

KernelBasis v0_kernel(const XkTable& table, PivotOrder order) {
  const int p = table.p();
  std::vector<int> residues;
  for (int r = 1; r <= (p - 1) / 2; ++r) residues.push_back(r);
  auto values = half_values(table, residues);
  KernelBasis kb{p, table.k(), (p - 1) / 2, {}};
  for (auto& v : nullspace(coordinate_matrix(values), order)) {
    kb.basis.emplace_back(p, std::move(v));
  }
  return kb;
}

KernelBasis v0_kernel(int p, int k) { return v0_kernel(xk_table(p, k)); }

int dim_bound(int p, int k) {
  require_odd_prime(p);
  if (k < 1) throw std::invalid_argument("k must be positive");
  const std::int64_t n = (p - 1) / 2;
  const std::int64_t r = gcd(k, p - 1);
  const std::int64_t num = v2(p - 1) > v2(k) ? n * (r - 1) : n * (r - 2);
  if (num % r != 0) throw std::logic_error("formula inconsistency");
  return static_cast<int>(num / r);
}

std::string_view to_string(DimCase c) {
  return c == DimCase::EqualityProven ? "EQUALITY-PROVEN" : "BOUND-ONLY";
}

DimCase dim_case(int p, int k) {
  const std::int64_t u = gcd(k, p - 1);
  if (u <= 2 || (u == 4 && p % 8 == 5)) return DimCase::EqualityProven;
  return DimCase::BoundOnly;
}

DimReport verify_dim(const XkTable& table) {
  DimReport rep;
  rep.p = table.p();
  rep.k = table.k();
  rep.kernel = v0_kernel(table);
  rep.dim = rep.kernel.dim();
  rep.bound = dim_bound(rep.p, rep.k);
  rep.dim_case = dim_case(rep.p, rep.k);
  const std::string where = "(p,k)=(" + std::to_string(rep.p) + "," + std::to_string(rep.k) + ")";
  if (rep.dim < rep.bound) throw TheoremViolation("dim below bound at " + where);
  if (rep.dim_case == DimCase::EqualityProven && rep.dim != rep.bound) {
    throw TheoremViolation("dim differs from proven value at " + where);
  }
  return rep;
}

DimReport verify_dim(int p, int k) { return verify_dim(xk_table(p, k)); }

bool full_rank_predicted(int p, int k) {
  const std::int64_t u = gcd(k, p - 1);
  return u == 1 || (u == 2 && p % 4 == 3);
}

bool subset_hypothesis(int p, int k) {
  const std::int64_t u = gcd(k, p - 1);
  return (u == 2 && p % 4 == 1) || (u == 4 && p % 8 == 5);
}

SubsetRank subset_rank(const XkTable& table, ResidueClass cls) {
  const int p = table.p();
  auto residues = columns_where(p, cls == ResidueClass::QR ? 1 : -1);
  auto values = half_values(table, residues);
  return {rank_over_Q(values), static_cast<int>(residues.size()), subset_hypothesis(p, table.k())};
}

SubsetRank subset_rank(int p, int k, ResidueClass cls) { return subset_rank(xk_table(p, k), cls); }

bool qr_support_check(const XkTable& table) {
  const int p = table.p();
  for (int sign : {1, -1}) {
    auto values = half_values(table, columns_where(p, sign));
    if (!values.empty() && !nullspace(coordinate_matrix(values)).empty()) return false;
  }
  return true;
}

bool qr_support_check(int p, int k) { return qr_support_check(xk_table(p, k)); }

}  // namespace chowla
