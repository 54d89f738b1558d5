// Copyright 2026 The fdunkl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fdunkl/dunkl.hpp"
#include "fdunkl/error.hpp"
#include "fdunkl/experiments.hpp"
#include "fdunkl/measure.hpp"
#include "fdunkl/specfun.hpp"
#include "fdunkl/weights.hpp"
#include "oracles.hpp"

using namespace fdunkl;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void orthonormality() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (double a : {-0.75, -0.5, 0.0, 2.0}) {
    const AlphaParam al(a);
    const QuadratureRule rule = build_rule(al, 128);
    const DunklSystem sys(al, 16);
    for (int j = -16; j <= 16; ++j) {
      for (int k = j; k <= 16; ++k) {
        const ComplexFunction f = [&](double x) {
          return sys.eval_e(j, x) * std::conj(sys.eval_e(k, x));
        };
        const double err = std::abs(integrate(rule, f) - (j == k ? 1.0 : 0.0));
        worst = std::max(worst, err);
      }
    }
  }
  const double t = seconds_since(t0);
  report(1, worst <= 1e-8 && t <= 60.0, "orthonormality",
         fmt("max error %.3g (limit 1e-8), %.2f s (limit 60 s)", worst, t));
}

void trig_reduction() {
  const AlphaParam al(-0.5);
  const DunklSystem sys(al, 10);
  const double c = std::pow(2.0, -0.25) * std::pow(std::numbers::pi, 0.25);
  double worst = 0.0;
  for (int j = -10; j <= 10; ++j) {
    for (int i = 1; i < 400; ++i) {
      const double x = -1.0 + 0.005 * i;
      const std::complex<double> expect =
          c * std::exp(std::complex<double>(0.0, std::numbers::pi * j * x));
      worst = std::max(worst, std::abs(sys.eval_e(j, x) - expect));
    }
  }
  const ZeroTable zt = build_zero_table(al, 10);
  double zerr = 0.0;
  for (int j = 1; j <= 10; ++j) zerr = std::max(zerr, std::abs(zt.zero(j) - j * std::numbers::pi));
  report(2, worst <= 1e-10 && zerr <= 1e-12, "trig reduction",
         fmt("max |e_j - c e^{i pi j x}| %.3g (limit 1e-10), zero error %.3g (limit 1e-12)", worst,
             zerr));
}

void zero_accuracy() {
  const ZeroTable zt = build_zero_table(AlphaParam(0.0), 10);
  const std::vector<double> ref = oracle::j1_zeros_by_bisection(10);
  double worst = 0.0;
  for (int j = 1; j <= 10; ++j) worst = std::max(worst, std::abs(zt.zero(j) - ref[j - 1]));
  report(3, worst <= 1e-9, "zero accuracy", fmt("max deviation %.3g (limit 1e-9)", worst));
}

void kernel_identity() {
  std::mt19937_64 rng(20260417);
  std::uniform_real_distribution<double> ux(-0.99, 0.99);
  std::uniform_real_distribution<double> ua(-0.95, 3.0);
  std::uniform_int_distribution<int> un(1, 20);

  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double a = ua(rng);
    const int n = un(rng);
    double x = ux(rng), y = ux(rng);
    while (std::abs(x - y) < 1e-6 || x == 0.0 || y == 0.0) y = ux(rng);
    const DunklSystem sys(AlphaParam(a), n);
    const double d = kernel_direct(sys, n, x, y);
    const double c = kernel_closed_sum_form(sys, n, x, y);
    worst = std::max(worst, std::abs(c - d) / std::abs(d));
  }

  boost::math::quadrature::tanh_sinh<double> ts;
  double civa = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double a = ua(rng);
    const int n = un(rng);
    double x = ux(rng), y = ux(rng);
    while (std::abs(x - y) < 1e-3) y = ux(rng);
    const AlphaParam al(a);
    const DunklSystem sys(al, n);
    const double M = sys.zeros().midpoint(n);
    const double sum = b_function(sys, M, x, y) + b_function(sys, M, y, x);
    const auto integrand = [&](double z) {
      return (e_alpha_imaginary_axis(al, z * x) * std::conj(e_alpha_imaginary_axis(al, z * y)))
                 .real() *
             oracle::mu_density(a, z);
    };
    const double q = ts.integrate(integrand, -M, 0.0) + ts.integrate(integrand, 0.0, M);
    civa = std::max(civa, std::abs(sum - q) / std::max(1.0, std::abs(q)));
  }
  report(4, worst <= 1e-8 && civa <= 1e-6, "kernel identity",
         fmt("closed vs direct max relative %.3g (limit 1e-8), CiVa max %.3g (limit 1e-6)", worst,
             civa));
}

void kernel_bound_stability() {
  bool ok = true;
  std::string detail;
  for (double a : {-0.75, 0.0}) {
    ExperimentConfig cfg;
    cfg.alpha = a;
    cfg.n_max = 32;
    cfg.sweep_n = {8, 16, 32};
    const KernelSweepResult r = kernel_sweep(cfg);
    double lo = INFINITY, hi = 0.0;
    for (const auto& [n, m] : r.max_ratio) {
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
    const double spread = hi / lo - 1.0;
    ok = ok && r.max_ratio.size() == 3 && spread <= 0.25;
    detail += fmt("alpha %g: C in [%.4f, %.4f], ", a, lo, hi) +
              fmt("variation %.1f%%; ", 100.0 * spread);
  }
  report(5, ok, "kernel bound stability", detail + "limit 25%");
}

void convergence_dichotomy() {
  ExperimentConfig cfg;
  cfg.alpha = 0.0;
  cfg.n_max = 64;
  // |j| up to 64 needs the largest rule to be resolved.
  cfg.quadrature_order = 200;

  cfg.p = 2.0;
  double lo = INFINITY, hi = 0.0;
  for (const NormGrowthRow& r : norm_growth(cfg)) {
    lo = std::min(lo, r.norm_estimate);
    hi = std::max(hi, r.norm_estimate);
  }
  cfg.p = 3.0;
  const double s3 = last_octave_slope(norm_growth(cfg));
  cfg.p = 6.0;
  const double s6 = last_octave_slope(norm_growth(cfg));
  const bool ok = lo >= 0.98 && hi <= 1.02 && s3 <= 0.05 && s6 >= 0.05;
  report(6, ok, "convergence dichotomy",
         fmt("p=2 norms in [%.6f, %.6f]; ", lo, hi) +
             fmt("p=3 slope %.4f (<= 0.05); p=6 slope %.4f (>= 0.05)", s3, s6));
}

void corollary_grid() {
  int cases = 0, bad = 0;
  for (double a : {-0.75, -0.5, 0.0, 1.0}) {
    for (double p : {1.5, 2.0, 3.0, 6.0}) {
      for (double b : {-0.4, 0.0, 0.4}) {
        const AlphaParam al(a);
        if (!corollary_predicate(al, p, b, 0.0, 0.0)) continue;
        ++cases;
        const PowerWeight w = PowerWeight::corollary(b, 0.0, 0.0);
        const TheoremConditions tc = theorem_conditions(al, p, w, w);
        const bool main = tc.thm1_applicable ? tc.thm1 : tc.thm2;
        if (!main || !tc.thm3_necessary) ++bad;
      }
    }
  }
  report(7, bad == 0, "corollary predicate",
         fmt("%.0f true cases, %.0f counterexamples", cases, bad));
}

void ap_cross_validation() {
  int compared = 0, mismatch = 0, nesting_bad = 0;
  for (double g : {-0.9, -0.5, 0.0, 0.5, 0.9, 1.5}) {
    for (double p : {1.5, 2.0, 3.0}) {
      // |x|^g is in A_p exactly for -1 < g < p - 1.
      const double gap = std::min(std::abs(g + 1.0), std::abs(p - 1.0 - g));
      if (gap < 0.05) continue;
      const PowerWeight w({{0.0, g}});
      const bool analytic = ap_power_pair(w, w, p, 1.0);
      const ApReport num = ap_numeric(w, w, p, 1.0, 16);
      ++compared;
      if (num.verdict != (analytic ? ApVerdict::kSatisfied : ApVerdict::kViolated)) ++mismatch;
      for (double delta : {1.25, 2.0}) {
        const ApReport strong = ap_numeric(w, w, p, delta, 16);
        if (strong.verdict == ApVerdict::kSatisfied && num.verdict != ApVerdict::kSatisfied)
          ++nesting_bad;
        if (ap_power_pair(w, w, p, delta) && !analytic) ++nesting_bad;
      }
    }
  }
  report(8, mismatch == 0 && nesting_bad == 0, "A_p cross-validation",
         fmt("%.0f pairs compared, %.0f verdict mismatches, %.0f nesting violations", compared,
             mismatch, nesting_bad));
}

void operator_oracles() {
  const double a = -0.3, b = 0.5;
  const RealFunction ind = [=](double y) { return (y >= a && y <= b) ? 1.0 : 0.0; };
  const std::vector<double> cuts{a, b};
  double herr = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double x = -0.95 + 0.1 * k;
    const double expect = std::log(std::abs((x - a) / (x - b)));
    herr = std::max(herr, std::abs(hilbert(ind, x, cuts) - expect));
  }

  double cerr = 0.0;
  const RealFunction one = [](double) { return 1.0; };
  for (int k = 1; k < 20; ++k) {
    const double x = 0.1 * k;
    cerr = std::max(cerr, std::abs(calderon(one, x) - (1.0 + std::log(2.0 / x))));
  }

  const std::vector<RealFunction> fs{
      one,
      [](double y) { return 1.0 + y * y; },
      ind,
      [](double y) { return std::exp(-3.0 * y); },
      [](double y) { return std::pow(std::abs(y), -0.5); },
  };
  const std::vector<std::vector<double>> fcuts{{}, {}, cuts, {}, {0.0}};
  int probes = 0, violations = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const RealFunction& f = fs[i];
    const RealFunction f1 = [&](double t) { return f(1.0 - t); };
    std::vector<double> f1cuts;
    for (double c : fcuts[i]) f1cuts.push_back(1.0 - c);
    std::sort(f1cuts.begin(), f1cuts.end());
    for (int k = 0; k < 20; ++k) {
      const double x = -0.95 + 0.1 * k;
      ++probes;
      const double j = std::abs(operator_j(f, x, fcuts[i]));
      if (j > calderon(f1, 1.0 - x, f1cuts) * (1.0 + 1e-12)) ++violations;
    }
  }
  report(9, herr <= 1e-6 && cerr <= 1e-8 && violations == 0, "operator oracles",
         fmt("Hilbert max error %.3g (limit 1e-6), Calderon max error %.3g (limit 1e-8), ", herr,
             cerr) +
             fmt("J domination %.0f/%.0f probes", probes - violations, probes));
}

void reproducibility() {
  ExperimentConfig cfg;
  cfg.alpha = 0.25;
  cfg.p = 3.0;
  cfg.n_max = 8;
  cfg.seed = 17;
  cfg.ap_budget = 10;
  int differ = 0;
  std::string names;
  for (const char* name : {"zeros", "norm-growth", "convergence", "kernel-sweep", "ap-check"}) {
    std::ostringstream first, second;
    run_command(name, cfg, first);
    run_command(name, cfg, second);
    if (first.str() != second.str() || first.str().empty()) {
      ++differ;
      names += std::string(" ") + name;
    }
  }
  report(10, differ == 0, "reproducibility",
         differ == 0 ? "5 commands byte-identical across two runs" : "differing:" + names);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{
      orthonormality,         trig_reduction, zero_accuracy,       kernel_identity,
      kernel_bound_stability, convergence_dichotomy, corollary_grid, ap_cross_validation,
      operator_oracles,       reproducibility,
  };
  int id = 0;
  for (const auto& c : criteria) {
    ++id;
    try {
      c();
    } catch (const std::exception& e) {
      report(id, false, "criterion", std::string("exception: ") + e.what());
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
