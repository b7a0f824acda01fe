#include "chowla/structmat.hpp"

#include "chowla/arith.hpp"
#include "chowla/lseries.hpp"

namespace chowla {

namespace {

Rational pow2(std::int64_t e) {
  Rational base = bmp::pow(Integer(2), static_cast<unsigned>(e < 0 ? -e : e));
  return e < 0 ? 1 / base : base;
}

template <class T>
bool equal(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

// Relative deviation |a - b| / max(|b|, 10^-digits).
Real relative_deviation(const ComplexApprox& a, const ComplexApprox& b, int digits) {
  Real scale = b.abs();
  Real tiny = bmp::pow(Real(10), -digits);
  if (scale < tiny) scale = tiny;
  return (a - b).abs() / scale;
}

// conj(eta)(r)^e for the character table's generator.
ComplexApprox eta_bar_power(const CharacterTable& eta, std::int64_t r, std::int64_t e) {
  return eta.value(static_cast<int>(mod(-e, eta.size())), r);
}

}  // namespace

std::vector<Rational> unit_vector(int m) {
  std::vector<Rational> u(m, Rational(0));
  u.at(0) = 1;
  return u;
}

template <>
Rational det_exact<Rational>(Matrix<Rational> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: matrix not square");
  if (m.rows() == 0) throw std::invalid_argument("det_exact: empty matrix");
  const Eigen::Index n = m.rows();
  IntegerMatrix a(n, n);
  Rational scale = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < n; ++j) l = bmp::lcm(l, Integer(bmp::denominator(m(i, j))));
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = bmp::numerator(m(i, j)) * (l / bmp::denominator(m(i, j)));
    scale /= l;
  }
  Integer prev = 1;
  int sign = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      sign = -sign;
    }
    for (Eigen::Index i = col + 1; i < n; ++i) {
      for (Eigen::Index j = col + 1; j < n; ++j) {
        a(i, j) = (a(col, col) * a(i, j) - a(i, col) * a(col, j)) / prev;
      }
      a(i, col) = 0;
    }
    prev = a(col, col);
  }
  return Rational(a(n - 1, n - 1)) * scale * sign;
}

FactorizationCheck linalg_factorization_check(Shape shape, const std::vector<Rational>& v, int digits) {
  if (shape != Shape::APlus && shape != Shape::AMinus) {
    throw std::invalid_argument("factorization check needs A+ or A-");
  }
  const int m = static_cast<int>(v.size());
  if (m < 1 || m > 12) throw std::invalid_argument("factorization check needs 1 <= m <= 12");
  Rational det = det_exact(build(shape, v));

  PrecisionScope scope(digits);
  static constexpr int kSin[4] = {0, 1, 0, -1};
  static constexpr int kCos[4] = {1, 0, -1, 0};
  const int sign = shape == Shape::APlus ? kSin[m % 4] - kCos[m % 4] : kSin[m % 4] + kCos[m % 4];

  ComplexApprox product(Real(sign), Real(0), digits);
  const int order = shape == Shape::APlus ? m : 2 * m;
  for (int l = shape == Shape::APlus ? 0 : 1; l < order; l += shape == Shape::APlus ? 1 : 2) {
    ComplexApprox eigen(Real(0), Real(0), digits);
    for (int j = 0; j < m; ++j) {
      if (v[j] != 0) eigen += Real(v[j]) * unit_root(static_cast<std::int64_t>(j) * l, order, digits);
    }
    product *= eigen;
  }
  FactorizationCheck out;
  out.det = Real(det);
  out.formula = product;
  ComplexApprox d(out.det, Real(0), digits);
  Real scale = bmp::abs(out.det) > 1 ? bmp::abs(out.det) : Real(1);
  out.rel_dev = (d - product).abs() / scale;
  out.pass = out.rel_dev < bmp::pow(Real(10), -(digits - 15));
  return out;
}

bool shift_identity_check(Shape shape, const std::vector<Rational>& v, int j) {
  if (shape != Shape::APlus && shape != Shape::AMinus) {
    throw std::invalid_argument("shift identity needs A+ or A-");
  }
  const bool neg = shape == Shape::AMinus;
  const int m = static_cast<int>(v.size());
  auto lhs = build(shape, shifted(v, j, neg));
  auto c = build(neg ? Shape::CMinus : Shape::CPlus, shifted(unit_vector(m), j, neg));
  return equal(lhs, multiply(c, build(shape, v)));
}

std::int64_t reindex_generator(int p, int k, std::int64_t g) {
  const std::int64_t u = gcd(k, p - 1);
  const std::int64_t v = (p - 1) / u;
  for (std::int64_t e = k / u % v; e < p - 1; e += v) {
    if (gcd(e, p - 1) == 1) return mod_pow(g, e, p);
  }
  throw std::logic_error("no primitive root in the reindexing class");
}

GaloisMatrix galois_matrix(const XkTable& table, std::int64_t r) {
  const int p = table.p();
  const int k = table.k();
  if (mod(r, p) == 0) throw std::invalid_argument("r must be coprime to p");
  GaloisMatrix gm;
  gm.p = p;
  gm.k = k;
  gm.r = mod(r, p);
  gm.g = table.generator();
  gm.u = static_cast<int>(gcd(k, p - 1));
  gm.v = (p - 1) / gm.u;
  gm.t = reindex_generator(p, k, gm.g);
  gm.variant = v2(p - 1) > v2(k) ? GaloisVariant::M : GaloisVariant::MPrime;
  const int n = gm.variant == GaloisVariant::M ? gm.v / 2 : gm.v;

  const CycloElem& base = table.z(gm.r);
  std::vector<CycloElem> orbit(2 * n - 1);
  for (int e = 0; e < 2 * n - 1; ++e) orbit[e] = GaloisMap(p, mod_pow(gm.g, e, p))(base);
  gm.entries.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) gm.entries(i, j) = orbit[i + j];
  }
  for (int j = 0; j < n; ++j) gm.x.push_back(table.z(gm.r * mod_pow(gm.t, static_cast<std::int64_t>(gm.u) * j, p)));
  return gm;
}

bool galois_twist_check(const GaloisMatrix& gm, int j) {
  const int n = gm.size();
  const bool neg = gm.variant == GaloisVariant::M;
  const int jj = static_cast<int>(mod(j, gm.v));
  auto lhs = apply_entrywise(gm.entries, GaloisMap(gm.p, mod_pow(gm.g, mod(j, gm.p - 1), gm.p)));
  auto c = build(neg ? Shape::CMinus : Shape::CPlus, shifted(unit_vector(n), jj, neg));
  return equal(lhs, multiply(c, gm.entries));
}

std::optional<Rational> GaloisDet::rational() const {
  if (i_exponent % 2 != 0 || !det_z.is_rational()) return std::nullopt;
  return i_exponent == 2 ? Rational(-det_z.rational_value()) : det_z.rational_value();
}

ComplexApprox GaloisDet::approx(int digits) const {
  return embed(det_z, digits) * i_power(i_exponent, digits);
}

GaloisDet galois_det(const GaloisMatrix& gm) {
  // det of (i^-k z) entries = i^(-k n) det of z entries.
  return {det_exact(gm.entries), static_cast<int>(mod(-static_cast<std::int64_t>(gm.k) * gm.size(), 4))};
}

Integer class_number_neg(int p) {
  require_odd_prime(p);
  if (p % 4 != 3) throw std::invalid_argument("class_number_neg needs p = 3 mod 4");
  std::int64_t count = 0;
  for (std::int64_t a = 1; 3 * a * a <= p; ++a) {
    for (std::int64_t b = -a; b <= a; ++b) {
      std::int64_t num = b * b + p;
      if (num % (4 * a) != 0) continue;
      std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if ((std::abs(b) == a || a == c) && b < 0) continue;
      ++count;
    }
  }
  return count;
}

Integer relative_class_number(int p, int digits) {
  CharacterTable tbl(p, digits);
  PrecisionScope scope(digits);
  ComplexApprox product(Real(2 * p), Real(0), digits);
  for (int j = 1; j < tbl.size(); j += 2) {
    ComplexApprox b1(Real(0), Real(0), digits);
    for (int a = 1; a < p; ++a) b1 += Real(a) * tbl.value(j, a);
    product *= Real(-1) / (2 * p) * b1;
  }
  Real rounded = bmp::round(product.re);
  const Real limit("1e-10");
  if (bmp::abs(product.re - rounded) > limit || bmp::abs(product.im) > limit) {
    throw std::runtime_error("precision insufficient");
  }
  return Integer(rounded.convert_to<long long>());
}

Real sin_plus_cos_quarter(int n, int digits) {
  PrecisionScope scope(digits);
  const Real root2 = bmp::sqrt(Real(2));
  switch (mod(n, 8)) {
    case 0: return 1;
    case 1: return root2;
    case 2: return 1;
    case 3: return 0;
    case 4: return -1;
    case 5: return -root2;
    case 6: return -1;
    default: return 0;
  }
}

std::string to_string(Corollary c) {
  switch (c) {
    case Corollary::Fcd1: return "fcd1";
    case Corollary::Fcd1b: return "fcd1b";
    case Corollary::Fcd2: return "fcd2";
    case Corollary::Fcd2b: return "fcd2b";
    case Corollary::Det1: return "det1";
    case Corollary::Det2: return "det2";
  }
  return "?";
}

Corollary parse_corollary(const std::string& name) {
  for (auto c : {Corollary::Fcd1, Corollary::Fcd1b, Corollary::Fcd2, Corollary::Fcd2b, Corollary::Det1,
                 Corollary::Det2}) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown corollary: " + name);
}

bool corollary_applies(Corollary c, int p, int k) {
  const std::int64_t u = gcd(k, p - 1);
  switch (c) {
    case Corollary::Fcd1: return u == 1;
    case Corollary::Fcd1b: return u == 2 && p % 4 == 3;
    case Corollary::Fcd2: return u == 2 && p % 4 == 1;
    case Corollary::Fcd2b: return u == 4 && p % 8 == 5;
    case Corollary::Det1: return v2(p - 1) > v2(k);
    case Corollary::Det2: return v2(p - 1) <= v2(k);
  }
  return false;
}

std::optional<Corollary> applicable_corollary(int p, int k) {
  for (auto c : {Corollary::Fcd1, Corollary::Fcd1b, Corollary::Fcd2, Corollary::Fcd2b}) {
    if (corollary_applies(c, p, k)) return c;
  }
  return std::nullopt;
}

ComplexApprox det_lemma_formula(int p, int k, std::int64_t r, int digits) {
  require_odd_prime(p);
  const std::int64_t g = primitive_root(p);
  const int u = static_cast<int>(gcd(k, p - 1));
  const int v = (p - 1) / u;
  const std::int64_t t = reindex_generator(p, k, g);
  CharacterTable eta(p, digits, t);
  PrecisionScope scope(digits);
  const Real pi = pi_real();
  auto lk = [&](std::int64_t j) { return cpow(l1_odd(eta, static_cast<int>(mod(j, p - 1)), digits), k); };

  if (v2(p - 1) > v2(k)) {
    const std::int64_t vv = v;
    ComplexApprox f = eta_bar_power(eta, r, vv * vv / 4);
    f = (sin_plus_cos_quarter(v, digits) * bmp::pow(Real(2), (k - 1) * v / 2) / bmp::pow(pi, k * v / 2)) * f;
    for (int l = 1; l < v; l += 2) {
      ComplexApprox s(Real(0), Real(0), digits);
      for (int a = 0; a < u; ++a) s += eta_bar_power(eta, r, vv * a) * lk(l + vv * a);
      f *= (Real(1) / u) * s;
    }
    return f;
  }
  const std::int64_t vv = v;
  ComplexApprox f = eta_bar_power(eta, r, vv * vv);
  const int sign = ((v - 1) / 2) % 2 == 0 ? 1 : -1;
  f = (sign * bmp::pow(2 / pi, k * v)) * f;
  for (int l = 1; l < 2 * v; l += 2) {
    ComplexApprox s(Real(0), Real(0), digits);
    for (int a = 0; a < u / 2; ++a) s += eta_bar_power(eta, r, 2 * vv * a) * lk(l + 2 * vv * a);
    f *= (Real(1) / u) * s;
  }
  return f;
}

namespace {

// prod over odd l <= (p-1)/2 of (L(1, eta^l)^k + (r/p) L(1, eta^{l+(p-1)/2})^k).
ComplexApprox paired_l_product(const CharacterTable& eta, int k, std::int64_t r, int digits) {
  const int p = eta.p();
  const int half = (p - 1) / 2;
  const Real leg = legendre(r, p);
  ComplexApprox prod(Real(1), Real(0), digits);
  for (int l = 1; l <= half; l += 2) {
    ComplexApprox a = cpow(l1_odd(eta, l, digits), k);
    ComplexApprox b = cpow(l1_odd(eta, static_cast<int>(mod(l + half, p - 1)), digits), k);
    prod *= a + leg * b;
  }
  return prod;
}

}  // namespace

FcdReport verify_fcd(const XkTable& table, std::int64_t r, Corollary which, int digits) {
  const int p = table.p();
  const int k = table.k();
  if (!corollary_applies(which, p, k)) throw std::invalid_argument("corollary inapplicable");

  GaloisDet gd = galois_det(galois_matrix(table, r));
  FcdReport rep;
  rep.corollary = which;
  rep.p = p;
  rep.k = k;
  rep.r = mod(r, p);
  rep.det_exact = gd.rational();
  ComplexApprox det = gd.approx(digits);

  PrecisionScope scope(digits);
  const Real pi = pi_real();
  ComplexApprox formula;
  switch (which) {
    case Corollary::Fcd1: {
      Integer h = relative_class_number(p, digits);
      Real value = sin_plus_cos_quarter(p - 1, digits);
      value *= ((p - 1) / 2) % 2 == 0 ? 1 : legendre(r, p);
      value *= Real(pow2(static_cast<std::int64_t>(k) * (p - 2) - (p - 1) / 2)) * Real(bmp::pow(h, k));
      value /= bmp::pow(Real(p), Real(k * (p + 3)) / 4);
      formula = {value, Real(0), digits};
      break;
    }
    case Corollary::Fcd1b: {
      Integer h = relative_class_number(p, digits);
      Rational value = ((p - 3) / 4) % 2 == 0 ? 1 : -1;
      value *= legendre(r, p);
      value *= pow2(static_cast<std::int64_t>(k) * (p - 2) - (p - 1) / 2);
      value *= bmp::pow(h, k);
      value /= bmp::pow(Integer(p), static_cast<unsigned>(k * (p + 3) / 4));
      rep.formula_exact = value;
      formula = {Real(value), Real(0), digits};
      break;
    }
    case Corollary::Fcd2:
    case Corollary::Fcd2b: {
      const std::int64_t t = reindex_generator(p, k, table.generator());
      CharacterTable eta(p, digits, t);
      const std::int64_t quarter = (p - 1) / 4;
      Real scale = which == Corollary::Fcd2 ? sin_plus_cos_quarter((p - 1) / 2, digits)
                                            : Real(((p - 5) / 8) % 2 == 0 ? 1 : -1);
      scale *= bmp::pow(Real(2), static_cast<int>((k - 2) * quarter)) / bmp::pow(pi, k * quarter);
      // fcd2: conj(eta)(r)^(v^2/4) with v = (p-1)/2; fcd2b: conj(eta)(r)^(((p-1)/4)^2).
      std::int64_t e = which == Corollary::Fcd2 ? quarter * quarter : quarter * quarter;
      formula = scale * (eta_bar_power(eta, r, e) * paired_l_product(eta, k, r, digits));
      break;
    }
    case Corollary::Det1:
    case Corollary::Det2: formula = det_lemma_formula(p, k, r, digits); break;
  }

  rep.det_float = det.re;
  rep.formula_float = formula.re;
  rep.rel_dev = relative_deviation(det, formula, digits);
  if (which == Corollary::Fcd1b) {
    rep.pass = rep.det_exact.has_value() && *rep.det_exact == *rep.formula_exact;
  } else {
    rep.pass = rep.rel_dev < bmp::pow(Real(10), -(digits - 20)) && formula.abs() > 0;
  }
  return rep;
}

FcdReport verify_fcd(int p, int k, std::int64_t r, Corollary which, int digits) {
  if (!corollary_applies(which, p, k)) throw std::invalid_argument("corollary inapplicable");
  return verify_fcd(xk_table(p, k), r, which, digits);
}

}  // namespace chowla
