// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fail.

#include "chowla/analytics.hpp"
#include "chowla/arith.hpp"
#include "chowla/cli.hpp"
#include "chowla/cotsum.hpp"
#include "chowla/lseries.hpp"
#include "chowla/structmat.hpp"
#include "chowla/vanish.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

using namespace chowla;
using Json = nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[miss] " << what << "; ";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::vector<int> kSweepPrimes{5, 7, 11, 13, 17, 29};
constexpr int kSweepKMax = 6;

OddPeriodicFunction odd(int p, const std::vector<int>& v) {
  return OddPeriodicFunction(p, std::vector<Rational>(v.begin(), v.end()));
}

RationalVector vec(const std::vector<int>& v) { return RationalVector(v.begin(), v.end()); }

void kernel_five(Outcome& o) {
  std::ostringstream out, err;
  const int code = cli::run({"kernel", "--p", "5", "--k", "2"}, out, err);
  o.require(code == 0, "exit code " + std::to_string(code));
  if (code != 0) return;
  Json j = Json::parse(out.str());
  o.require(j["dim"] == 1, "dim " + j["dim"].dump());
  o.require(j["basis"] == Json::array({Json::array({"1/1", "-2/1"})}), "basis " + j["basis"].dump());
  o.require(dk1_via_xk(odd(5, {1, -2}), xk_table(5, 2)).exact_zero, "combination not exactly zero");
  o.detail << "dim=" << j["dim"] << " basis=" << j["basis"].dump();
}

void kernel_thirteen(Outcome& o) {
  std::ostringstream out, err;
  const int code = cli::run({"kernel", "--p", "13", "--k", "2"}, out, err);
  o.require(code == 0, "exit code " + std::to_string(code));
  if (code != 0) return;
  Json j = Json::parse(out.str());
  o.require(j["dim"] == 3, "dim " + j["dim"].dump());

  // Images of (a,b,c) = unit vectors, indexed f(1..6).
  const std::vector<std::vector<int>> family{
      {18, 19, 0, 0, 4, -11}, {0, 11, 0, 18, -19, -4}, {0, 4, 18, 0, -11, 19}};
  KernelBasis kb = v0_kernel(13, 2);
  XkTable t = xk_table(13, 2);
  int inside = 0;
  for (const auto& f : family) {
    const bool in = kb.contains(vec(f));
    inside += in;
    o.require(in, "(" + std::to_string(f[0]) + "," + std::to_string(f[1]) + ",...) outside span");
    o.require(in == dk1_via_xk(odd(13, f), t).exact_zero, "span test disagrees with exact sum");
  }
  // Same family with f(2), f(8), f(6) negated; reported only.
  int flipped = 0;
  for (auto f : family) {
    for (int i : {1, 4, 5}) f[i] = -f[i];
    flipped += kb.contains(vec(f)) && dk1_via_xk(odd(13, f), t).exact_zero;
  }
  o.detail << "dim=" << j["dim"] << " " << inside << "/3 stated vectors in span; " << flipped
           << "/3 with odd powers of 2 negated";
}

void dim_sweep(Outcome& o) {
  int cases = 0, proven = 0;
  for (int p : kSweepPrimes) {
    for (int k = 1; k <= kSweepKMax; ++k) {
      DimReport rep = verify_dim(p, k);
      ++cases;
      o.require(rep.dim >= rep.bound, "dim below bound at (" + std::to_string(p) + "," + std::to_string(k) + ")");
      if (rep.dim_case == DimCase::EqualityProven) {
        ++proven;
        o.require(rep.dim == rep.bound, "equality fails at (" + std::to_string(p) + "," + std::to_string(k) + ")");
      }
    }
  }
  o.require(verify_dim(13, 4).dim == 3, "(13,4) dim");
  o.detail << cases << " cases, " << proven << " with proven equality";
}

void full_rank_iff(Outcome& o) {
  int full = 0;
  for (int p : kSweepPrimes) {
    for (int k = 1; k <= kSweepKMax; ++k) {
      XkTable t = xk_table(p, k);
      std::vector<CycloElem> half;
      for (int r = 1; r <= (p - 1) / 2; ++r) half.push_back(t.z(r));
      const bool is_full = rank_over_Q(half) == (p - 1) / 2;
      const int u = static_cast<int>(gcd(k, p - 1));
      const bool predicted = u == 1 || (u == 2 && p % 4 == 3);
      full += is_full;
      o.require(is_full == predicted, "mismatch at (" + std::to_string(p) + "," + std::to_string(k) + ")");
    }
  }
  for (int k : {2, 4}) {
    for (auto cls : {ResidueClass::QR, ResidueClass::QNR}) {
      SubsetRank s = subset_rank(13, k, cls);
      o.require(s.rank == 3 && s.size == 3, "subset rank at (13," + std::to_string(k) + ")");
    }
  }
  o.detail << full << " full-rank cases, subset ranks 3";
}

void trace_formula(Outcome& o) {
  const Integer h = class_number_neg(7);
  o.require(h == 1, "h(-7) = " + h.str());
  XkTable t = xk_table(7, 2);
  for (int r = 1; r < 7; ++r) {
    const Rational target = Rational(8 * legendre(r, 7) * h * h, 7);
    const Rational got = trace_xk(t, r);
    if (got != target) {
      o.require(false, "r=" + std::to_string(r) + " trace " + to_string(got) + " vs " + to_string(target));
    }
  }
  XkTable five = xk_table(5, 2);
  for (int r = 1; r < 5; ++r) o.require(trace_xk(five, r) == 0, "(5,2) trace nonzero");
  o.detail << "(7,2,1) trace=" << to_string(trace_xk(t, 1));
}

void fcd1b_gold(Outcome& o) {
  const Integer h = relative_class_number(7);
  o.require(h == 1, "h_7^- = " + h.str());
  XkTable t = xk_table(7, 2);
  for (int r = 1; r < 7; ++r) {
    FcdReport rep = verify_fcd(t, r, Corollary::Fcd1b);
    const Rational target = Rational(-128 * legendre(r, 7), 16807) * h * h;
    o.require(rep.det_exact.has_value() && *rep.det_exact == target, "r=" + std::to_string(r));
    o.require(rep.pass, "closed form r=" + std::to_string(r));
  }
  o.detail << "det(7,2,1)=" << to_string(*verify_fcd(t, 1, Corollary::Fcd1b).det_exact);
}

void fcd2_numeric(Outcome& o) {
  constexpr int kDigits = 50;
  const Real bound("1e-30");
  Real worst = 0;
  for (auto [k, c] : {std::pair{2, Corollary::Fcd2}, {4, Corollary::Fcd2b}}) {
    XkTable t = xk_table(13, k);
    for (int r = 1; r < 13; ++r) {
      FcdReport rep = verify_fcd(t, r, c, kDigits);
      if (rep.rel_dev > worst) worst = rep.rel_dev;
      o.require(rep.rel_dev < bound, to_string(c) + " r=" + std::to_string(r));
    }
  }
  o.detail << "worst relative deviation " << worst.str(3, std::ios::scientific);
}

void pass_proposition(Outcome& o) {
  const double target = 4 * std::numbers::pi * std::numbers::pi / (25 * std::sqrt(5.0));
  SeriesEstimate s = truncated_congruence_sum(5, 2, 1, 1'000'000);
  o.require(std::abs(s.estimate - target) < 1e-3, "(5,2,1) off by " + std::to_string(s.estimate - target));
  o.detail << "(5,2,1) est=" << s.estimate << " target=" << target << "; ";
  XkTable t = xk_table(7, 2);
  DivisorTable cache = dk_sieve(2, 4'000'000);
  double worst = 0;
  for (int r = 1; r < 7; ++r) {
    PassReport rep = verify_pass(t, r, 1'000'000, kDefaultDigits, &cache);
    worst = std::max(worst, rep.deviation);
    o.require(rep.pass && rep.deviation < 1e-3, "(7,2," + std::to_string(r) + ")");
  }
  o.detail << "(7,2,r) worst deviation " << worst;
}

void moments(Outcome& o) {
  const Rational lhs = moment_lhs(101, 1, 2);
  o.require(lhs == Rational(3300, 10201), "(101,1,2) lhs " + to_string(lhs));
  const double dev101 = std::abs(lhs.convert_to<double>() - 1.0 / 3);
  o.require(dev101 < 4 / std::pow(101.0, 0.9), "(101,1,2) deviation");
  const double lhs29 = moment_lhs(29, 2, 2).convert_to<double>();
  const double dev29 = std::abs(lhs29 - 5.0 / 9);
  const double bound29 = 4 / std::pow(29.0, 0.9);
  o.require(dev29 < bound29, "(29,2,2) lhs " + std::to_string(lhs29) + " deviation " + std::to_string(dev29) +
                                 " >= " + std::to_string(bound29));
  int odd_checked = 0;
  for (int p : {3, 5, 7, 11, 13, 29, 101}) {
    for (int k = 1; k <= 4; ++k) {
      if (p == 101 && k > 1) continue;
      XkTable t = xk_table(p, k);
      for (int m : {1, 3, 5}) {
        CycloElem direct = CycloElem::constant(p, 0);
        for (int r = 1; r < p; ++r) {
          CycloElem power = t.z(r);
          for (int e = 1; e < m; ++e) power *= t.z(r);
          direct += power;
        }
        o.require(direct.is_zero(), "odd power sum nonzero");
        o.require(moment_lhs(t, m) == 0, "odd moment nonzero");
        ++odd_checked;
      }
    }
  }
  o.detail << "(101,1,2) dev=" << dev101 << "; " << odd_checked << " odd moments zero";
}

void property_suites(Outcome& o) {
  // Galois equivariance on the sweep.
  int maps = 0;
  for (int p : kSweepPrimes) {
    for (int k = 1; k <= kSweepKMax; ++k) {
      XkTable t = xk_table(p, k);
      for (int c = 1; c < p; ++c) {
        GaloisMap s(p, c);
        for (int r = 1; r < p; ++r) {
          if (!(s(t.z(r)) == t.z(mod_pow(c, k, p) * r % p))) {
            o.require(false, "equivariance (" + std::to_string(p) + "," + std::to_string(k) + ")");
          }
        }
        ++maps;
      }
    }
  }
  o.detail << maps << " Galois maps; ";

  for (int p : {3, 5, 7, 11, 13}) {
    for (int k = 1; k <= 4; ++k) {
      XkTable t = xk_table(p, k);
      for (int r = 1; r < p; ++r) {
        if (!(t.z(r) == xk_naive(p, k, r))) o.require(false, "oracle mismatch (" + std::to_string(p) + ")");
      }
    }
  }

  std::mt19937 rng(20261018);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Real worst_factor = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + trial % 10;
    std::vector<Rational> v;
    for (int i = 0; i < m; ++i) v.emplace_back(num(rng), den(rng));
    for (auto shape : {Shape::APlus, Shape::AMinus}) {
      FactorizationCheck c = linalg_factorization_check(shape, v, 50);
      if (c.rel_dev > worst_factor) worst_factor = c.rel_dev;
      o.require(c.rel_dev < Real("1e-35"), "factorization m=" + std::to_string(m));
    }
    for (int j = 0; j < m; ++j) o.require(shift_identity_check(Shape::APlus, v, j), "cyclic shift");
    for (int j = 0; j < 2 * m; ++j) o.require(shift_identity_check(Shape::AMinus, v, j), "negacyclic shift");
  }
  o.detail << "factorization worst " << worst_factor.str(3, std::ios::scientific) << "; ";

  // Three routes on random odd f.
  std::uniform_int_distribution<int> coef(-3, 3);
  double worst_series = 0;
  int routes = 0;
  for (int k = 1; k <= 4; ++k) {
    DivisorTable cache = dk_sieve(k, 4'000'000);
    const double tol = pass_tolerance(k);
    for (int p : {3, 5, 7, 11, 13}) {
      XkTable t = xk_table(p, k);
      std::vector<OddPeriodicFunction> fs;
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> v((p - 1) / 2);
        for (auto& x : v) x = coef(rng);
        fs.push_back(odd(p, v));
      }
      auto series = dk1_series_batch(fs, k, 1'000'000, tol, &cache);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        DkValue a = dk1_via_xk(fs[i], t, 50);
        ComplexApprox b = dk1_via_characters(fs[i], k, 50);
        const std::string at = "(" + std::to_string(p) + "," + std::to_string(k) + ")";
        o.require(bmp::abs(a.value - b.re) < Real("1e-30") && bmp::abs(b.im) < Real("1e-30"),
                  "characters disagree " + at);
        const double dev = std::abs(series[i].estimate - a.value.convert_to<double>());
        worst_series = std::max(worst_series, dev);
        o.require(series[i].converged && dev < tol, "series " + at + " dev " + std::to_string(dev));
        ++routes;
      }
    }
  }
  o.detail << routes << " three-route checks, worst series deviation " << worst_series;
}

}  // namespace

int main() {
  const std::vector<std::tuple<std::string, double, std::function<void(Outcome&)>>> criteria{
      {"kernel p=5 k=2", 1, kernel_five},
      {"kernel p=13 k=2 family", 10, kernel_thirteen},
      {"dimension sweep", 300, dim_sweep},
      {"full rank iff", 0, full_rank_iff},
      {"trace formula (7,2)", 0, trace_formula},
      {"fcd1b gold (7,2)", 0, fcd1b_gold},
      {"fcd2/fcd2b (13,2),(13,4)", 0, fcd2_numeric},
      {"truncated sums (5,2,1),(7,2,r)", 0, pass_proposition},
      {"moments", 0, moments},
      {"property suites", 0, property_suites},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, limit, run] : criteria) {
    ++index;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = seconds_since(t0);
    if (limit > 0 && secs >= limit) {
      o.pass = false;
      o.detail << " [slow: " << secs << "s >= " << limit << "s]";
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << index << " " << name << " (" << std::fixed
              << std::setprecision(2) << secs << "s) " << std::defaultfloat << std::setprecision(6)
              << o.detail.str() << std::endl;
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
