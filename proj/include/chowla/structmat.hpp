#pragma once

// Circulant and negacyclic matrices, their determinant factorizations, the
// Galois matrices built from x_k(r;p), and the determinant / class number
// identities they satisfy.
//
// Matrix helpers are templated on the scalar so the same code runs over Q
// (Rational) and over Q(xi_p) (CycloElem).

#include "chowla/cotsum.hpp"
#include "chowla/exactalg.hpp"
#include "chowla/vanish.hpp"

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chowla {

template <class T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

enum class Shape { APlus, AMinus, CPlus, CMinus };

/// A_+: (i,j) -> v_{(i+j) mod m}. A_-: same with a sign flip when i+j >= m.
/// C_+: (i,j) -> v_{(i-j) mod m}. C_-: same with a sign flip when j > i.
template <class T>
Matrix<T> build(Shape shape, const std::vector<T>& v) {
  if (v.empty()) throw std::invalid_argument("build: empty vector");
  const auto m = static_cast<Eigen::Index>(v.size());
  Matrix<T> out(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      bool negate = false;
      Eigen::Index idx = 0;
      switch (shape) {
        case Shape::APlus: idx = (i + j) % m; break;
        case Shape::AMinus: idx = (i + j) % m; negate = i + j >= m; break;
        case Shape::CPlus: idx = ((i - j) % m + m) % m; break;
        case Shape::CMinus: idx = ((i - j) % m + m) % m; negate = j > i; break;
      }
      out(i, j) = negate ? T(-v[idx]) : v[idx];
    }
  }
  return out;
}

/// v_j^{+-} = (v_j, ..., v_{m-1}, +-v_0, ..., +-v_{j-1}); for the negacyclic
/// sign and m <= j < 2m, v_j^- = -v_{j-m}^-.
template <class T>
std::vector<T> shifted(const std::vector<T>& v, int j, bool negacyclic) {
  const int m = static_cast<int>(v.size());
  if (j < 0 || j >= (negacyclic ? 2 * m : m)) throw std::out_of_range("shift index");
  if (j >= m) {
    auto w = shifted(v, j - m, true);
    for (auto& x : w) x = -x;
    return w;
  }
  std::vector<T> out;
  out.reserve(m);
  for (int i = j; i < m; ++i) out.push_back(v[i]);
  for (int i = 0; i < j; ++i) out.push_back(negacyclic ? T(-v[i]) : v[i]);
  return out;
}

/// Unit vector (1, 0, ..., 0) of length m over the rationals.
std::vector<Rational> unit_vector(int m);

/// Matrix product for a rational left factor; T is Rational or CycloElem.
template <class T>
Matrix<T> multiply(const Matrix<Rational>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows() || b.size() == 0) throw std::invalid_argument("multiply: shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index c = 0; c < b.cols(); ++c) {
      T acc = zero_like(b(0, 0));
      for (Eigen::Index l = 0; l < a.cols(); ++l) {
        if (a(i, l) != 0) acc += b(l, c) * a(i, l);
      }
      out(i, c) = std::move(acc);
    }
  }
  return out;
}

/// Exact determinant by Gaussian elimination over a field.
template <class T>
T det_exact(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: matrix not square");
  if (m.rows() == 0) throw std::invalid_argument("det_exact: empty matrix");
  const Eigen::Index n = m.rows();
  T det = one_like(m(0, 0));
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && is_zero(m(piv, col))) ++piv;
    if (piv == n) return zero_like(m(0, 0));
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      det = -det;
    }
    const T inv = one_like(m(col, col)) / m(col, col);
    det *= m(col, col);
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      const T f = m(i, col) * inv;
      for (Eigen::Index j = col + 1; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

/// Over Q: Bareiss elimination on the denominator-cleared matrix.
template <>
Rational det_exact<Rational>(Matrix<Rational> m);

template <class T>
Matrix<T> apply_entrywise(const Matrix<T>& m, const GaloisMap& s) {
  Matrix<T> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = s(m(i, j));
  }
  return out;
}

struct FactorizationCheck {
  Real det;
  ComplexApprox formula;
  Real rel_dev;
  bool pass = false;
};

/// Compares det(A_+-(v)) with the eigenvalue product
///   (sin(pi m/2) -+ cos(pi m/2)) prod_l sum_j v_j xi^{jl}
/// in `digits`-digit arithmetic; pass iff the relative deviation is below
/// 10^-(digits-15).
FactorizationCheck linalg_factorization_check(Shape shape, const std::vector<Rational>& v,
                                              int digits = kDefaultDigits);

/// Exact check of A_+-(v_j^+-) = C_+-(u_j^+-) A_+-(v).
bool shift_identity_check(Shape shape, const std::vector<Rational>& v, int j);

enum class GaloisVariant { M, MPrime };

/// (sigma_g^{i+j}(z_k(r;p)))_{i,j}: variant M (negacyclic, size v/2) when
/// v2(p-1) > v2(k), else M' (circulant, size v); u = gcd(k,p-1), v = (p-1)/u.
/// Entries are held in the z = i^k x normalization.
struct GaloisMatrix {
  int p = 0;
  int k = 0;
  std::int64_t r = 0;
  std::int64_t g = 0;
  std::int64_t t = 0;  // reindex_generator(p, k, g)
  int u = 0;
  int v = 0;
  GaloisVariant variant = GaloisVariant::M;
  Matrix<CycloElem> entries;
  std::vector<CycloElem> x;  // z_k(r t^{u j}), j = 0..size-1

  int size() const { return static_cast<int>(entries.rows()); }
  Shape shape() const { return variant == GaloisVariant::M ? Shape::AMinus : Shape::APlus; }
};

/// Primitive root t = g^e with e = k/u mod v, so t^u = g^k. The least such e
/// coprime to p-1; e = k/u itself whenever that already works.
std::int64_t reindex_generator(int p, int k, std::int64_t g);

GaloisMatrix galois_matrix(const XkTable& table, std::int64_t r);

/// sigma_{g^j}(M) == C_-+(u_j) M, exactly.
bool galois_twist_check(const GaloisMatrix& gm, int j);

/// det of the matrix in the x normalization: i^{i_exponent} * det_z.
struct GaloisDet {
  CycloElem det_z;
  int i_exponent = 0;

  /// Exact value when it is rational (i_exponent even and det_z rational).
  std::optional<Rational> rational() const;
  ComplexApprox approx(int digits = kDefaultDigits) const;
};

GaloisDet galois_det(const GaloisMatrix& gm);

/// h(-p) by counting reduced forms of discriminant -p; needs p = 3 mod 4.
Integer class_number_neg(int p);

/// h_p^- = 2p prod_{chi odd} (-B_{1,chi}/2), rounded with a residual check.
Integer relative_class_number(int p, int digits = kDefaultDigits);

/// sin(pi n/4) + cos(pi n/4) from an n mod 8 lookup.
Real sin_plus_cos_quarter(int n, int digits = kDefaultDigits);

enum class Corollary { Fcd1, Fcd1b, Fcd2, Fcd2b, Det1, Det2 };
std::string to_string(Corollary c);
Corollary parse_corollary(const std::string& name);

/// The closed-form corollary whose hypothesis (p,k) satisfies, if any.
std::optional<Corollary> applicable_corollary(int p, int k);
bool corollary_applies(Corollary c, int p, int k);

/// The general eigenvalue-product formula for det(M) / det(M') in terms of
/// L(1, eta^l), eta the character with eta(t) = e^(2 pi i/(p-1)).
ComplexApprox det_lemma_formula(int p, int k, std::int64_t r, int digits = kDefaultDigits);

struct FcdReport {
  Corollary corollary = Corollary::Det1;
  int p = 0;
  int k = 0;
  std::int64_t r = 0;
  std::optional<Rational> det_exact;
  std::optional<Rational> formula_exact;
  Real det_float;
  Real formula_float;
  Real rel_dev;
  bool pass = false;
};

/// Determinant of the Galois matrix against the chosen closed form. fcd1b is
/// compared exactly; others numerically at 10^-(digits-20) relative.
/// Throws "corollary inapplicable" if the hypothesis fails.
FcdReport verify_fcd(int p, int k, std::int64_t r, Corollary which, int digits = kDefaultDigits);
FcdReport verify_fcd(const XkTable& table, std::int64_t r, Corollary which, int digits = kDefaultDigits);

}  // namespace chowla
