#include "chowla/lseries.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace chowla;

namespace {

constexpr int kDigits = 50;

Real tol(const char* s) { return Real(s); }

OddPeriodicFunction odd(int p, std::vector<int> v) {
  std::vector<Rational> q(v.begin(), v.end());
  return OddPeriodicFunction(p, q);
}

}  // namespace

TEST(Characters, ParityAndOrthogonality) {
  CharacterTable tbl(11, 30);
  PrecisionScope s(30);
  for (int j = 0; j < tbl.size(); ++j) {
    ComplexApprox at_minus_one = tbl.value(j, 10);
    EXPECT_LT(bmp::abs(at_minus_one.re - (CharacterTable::is_odd(j) ? -1 : 1)), tol("1e-25"));
    for (int l = 0; l < tbl.size(); ++l) {
      ComplexApprox sum(Real(0), Real(0), 30);
      for (int a = 1; a < 11; ++a) sum += tbl.value(j, a) * tbl.value(l, a).conj();
      Real expect = j == l ? 10 : 0;
      EXPECT_LT((sum - ComplexApprox(expect, Real(0), 30)).abs(), tol("1e-25"));
    }
  }
  EXPECT_EQ(tbl.value(3, 22).abs(), 0);
}

TEST(Characters, Multiplicative) {
  CharacterTable tbl(13, 30);
  PrecisionScope s(30);
  for (int a = 1; a < 13; ++a) {
    ComplexApprox lhs = tbl.value(2, a) * tbl.value(5, a);
    EXPECT_LT((lhs - tbl.value(7, a)).abs(), tol("1e-25"));
  }
}

TEST(L1, QuadraticCharacterModSeven) {
  // j = 3 is the Legendre symbol mod 7; L(1) = pi h(-7)/sqrt 7 with h(-7) = 1.
  CharacterTable tbl(7, kDigits);
  ComplexApprox l = l1_odd(tbl, 3, kDigits);
  PrecisionScope s(kDigits);
  EXPECT_LT(bmp::abs(l.re - pi_real() / bmp::sqrt(Real(7))), tol("1e-45"));
  EXPECT_LT(bmp::abs(l.im), tol("1e-45"));
}

TEST(L1, OddCharacterModFiveAgainstDigamma) {
  // -(1/5) sum chi(a) psi(a/5), evaluated independently with mpmath.
  CharacterTable tbl(5, kDigits);
  ComplexApprox l = l1_odd(tbl, 1, kDigits);
  PrecisionScope s(kDigits);
  EXPECT_LT(bmp::abs(l.re - Real("0.864806265977209967231182065858623337038285557")), tol("1e-40"));
  EXPECT_LT(bmp::abs(l.im - Real("0.204153066138385146194002306648259302863165368")), tol("1e-40"));
}

TEST(L1, EvenQuadraticCharacterModFive) {
  // L(1, (./5)) = 2 log(golden ratio) / sqrt 5.
  CharacterTable tbl(5, kDigits);
  ComplexApprox l = l1_even(tbl, 2, kDigits);
  PrecisionScope s(kDigits);
  EXPECT_LT(bmp::abs(l.re - Real("0.430408940964004038889433232950605425424570683")), tol("1e-40"));
  EXPECT_LT(bmp::abs(l.im), tol("1e-40"));
}

TEST(L1, EvenCharacterAgainstSeries) {
  // Partial sums of sum chi(n)/n averaged over one period.
  CharacterTable tbl(7, 30);
  ComplexApprox l = l1_even(tbl, 2, 30);
  const int N = 700000;
  std::vector<double> cre(7), cim(7);
  for (int a = 0; a < 7; ++a) {
    cre[a] = tbl.value(2, a).re.convert_to<double>();
    cim[a] = tbl.value(2, a).im.convert_to<double>();
  }
  double re = 0, im = 0, avg_re = 0, avg_im = 0;
  for (int n = 1; n <= N; ++n) {
    re += cre[n % 7] / n;
    im += cim[n % 7] / n;
    if (n > N - 7) {
      avg_re += re / 7;
      avg_im += im / 7;
    }
  }
  EXPECT_NEAR(avg_re, l.re.convert_to<double>(), 1e-4);
  EXPECT_NEAR(avg_im, l.im.convert_to<double>(), 1e-4);
}

TEST(L1, ConjugateSymmetry) {
  CharacterTable tbl(13, 40);
  PrecisionScope s(40);
  for (int j = 1; j < 12; ++j) {
    ComplexApprox a = CharacterTable::is_odd(j) ? l1_odd(tbl, j, 40) : l1_even(tbl, j, 40);
    ComplexApprox b = CharacterTable::is_odd(j) ? l1_odd(tbl, 12 - j, 40) : l1_even(tbl, 12 - j, 40);
    EXPECT_LT((a.conj() - b).abs(), tol("1e-35"));
  }
}

TEST(L1, Errors) {
  CharacterTable tbl(5, 30);
  EXPECT_THROW(l1_odd(tbl, 2), std::invalid_argument);
  EXPECT_THROW(l1_even(tbl, 0), std::invalid_argument);
  EXPECT_THROW(l1_even(tbl, 1), std::invalid_argument);
}

TEST(OddFunction, Extension) {
  OddPeriodicFunction f = odd(7, {1, 2, 3});
  EXPECT_EQ(f(0), 0);
  EXPECT_EQ(f(5), -2);
  EXPECT_EQ(f(-1), -1);
  EXPECT_EQ(f(15), 1);
  Rational total = 0;
  for (int a = 0; a < 7; ++a) total += f(a);
  EXPECT_EQ(total, 0);
  EXPECT_THROW(odd(7, {1, 2}), std::invalid_argument);
}

TEST(Coefficients, EvenCharactersVanishOnOddFunctions) {
  CharacterTable tbl(11, 40);
  OddPeriodicFunction f = odd(11, {3, -1, 4, 1, -5});
  for (int j = 0; j < tbl.size(); j += 2) EXPECT_LT(character_coefficient(f, tbl, j).abs(), tol("1e-35"));
}

TEST(DkValue, VanishingExamples) {
  DkValue five = dk1_via_xk(odd(5, {1, -2}), xk_table(5, 2));
  EXPECT_TRUE(five.exact_zero);
  EXPECT_TRUE(five.exact.is_zero());
  EXPECT_EQ(five.value, 0);
  DkValue thirteen = dk1_via_xk(odd(13, {18, -19, 0, 0, -4, 11}), xk_table(13, 2));
  EXPECT_TRUE(thirteen.exact_zero);
  DkValue seven = dk1_via_xk(odd(7, {1, 0, 0}), xk_table(7, 2));
  EXPECT_FALSE(seven.exact_zero);
  EXPECT_GT(bmp::abs(seven.value), Real("1e-3"));
  EXPECT_THROW(dk1_via_xk(odd(7, {1, 0, 0}), xk_table(5, 2)), std::invalid_argument);
}

TEST(DkValue, CharacterRouteAgrees) {
  ComplexApprox z = dk1_via_characters(odd(5, {1, -2}), 2, kDigits);
  EXPECT_LT(z.abs(), tol("1e-30"));
  OddPeriodicFunction f = odd(7, {1, 1, 1});
  ComplexApprox c = dk1_via_characters(f, 1, kDigits);
  DkValue x = dk1_via_xk(f, xk_table(7, 1), kDigits);
  EXPECT_LT(bmp::abs(c.re - x.value), tol("1e-30"));
  EXPECT_LT(bmp::abs(c.im), tol("1e-30"));
}

TEST(DkValue, RandomRouteAgreement) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int p : {5, 7}) {
    for (int k = 1; k <= 3; ++k) {
      XkTable t = xk_table(p, k);
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> v((p - 1) / 2);
        for (auto& x : v) x = dist(rng);
        OddPeriodicFunction f = odd(p, v);
        DkValue a = dk1_via_xk(f, t, kDigits);
        ComplexApprox b = dk1_via_characters(f, k, kDigits);
        EXPECT_LT(bmp::abs(a.value - b.re), tol("1e-30"));
      }
    }
  }
}

TEST(Series, FiveTwoVanishes) {
  SeriesEstimate s = dk1_series(odd(5, {1, -2}), 2);
  EXPECT_LT(std::abs(s.estimate), 1e-3);
  EXPECT_TRUE(s.converged);
}

TEST(Series, KOneModThree) {
  SeriesEstimate s = dk1_series(odd(3, {1}), 1);
  EXPECT_NEAR(s.estimate, 0.604599788078072616, 1e-3);
}

TEST(Series, MatchesXkRoute) {
  OddPeriodicFunction f = odd(7, {2, -1, 3});
  SeriesEstimate s = dk1_series(f, 2);
  DkValue x = dk1_via_xk(f, xk_table(7, 2));
  EXPECT_NEAR(s.estimate, x.value.convert_to<double>(), 1e-3);
}

TEST(Series, Errors) {
  EXPECT_THROW(dk1_series(odd(5, {1, -2}), 2, 999), std::invalid_argument);
}
