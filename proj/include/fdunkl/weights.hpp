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

#pragma once

// Muckenhoupt A_p / A_p^delta checks for weight pairs, the exponent
// conditions under which S_n is uniformly bounded between power-weighted
// L^p(d mu_alpha) spaces, and the model operators (Calderon, J, Hilbert)
// together with a randomized weighted-boundedness probe.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fdunkl/measure.hpp"
#include "fdunkl/power_weight.hpp"
#include "fdunkl/specfun.hpp"

namespace fdunkl {

enum class ApVerdict { kSatisfied, kViolated, kInconclusive };

std::string to_string(ApVerdict v);

struct Interval {
  double lo;
  double hi;
};

struct ApReport {
  double p = 2.0;
  double delta = 1.0;
  double constant_estimate = 0.0;  // +inf when some average diverges
  int intervals_tested = 0;
  ApVerdict verdict = ApVerdict::kInconclusive;
  std::optional<Interval> witness_interval;
  // Largest product over the intervals of each dyadic scale, coarse to fine.
  std::vector<double> scale_maxima;

  // {"p","delta","constant_estimate","verdict","witness_interval"}; infinite
  // constants are written as the string "inf".
  std::string to_json() const;
};

struct ApOptions {
  double domain_lo = -1.0;
  double domain_hi = 1.0;
  // Anchors for the dyadic intervals besides the domain ends and 0.
  std::vector<double> anchors;
  // Set when u == 0 or v == inf identically (trivially in A_p).
  bool trivial_pair = false;
};

// Sup over dyadic intervals (lengths 2^{1-k}, k <= budget, anchored at the
// domain ends, 0 and `anchors`) of avg(u^delta) * avg(v^{-delta/(p-1)})^{p-1}.
// satisfied: the running sup changes < 5% over the last 4 scales.
// violated:  an average diverges, or the per-scale max grows >= 1.2x over
//            4 consecutive scales.
ApReport ap_numeric(const RealFunction& u, const RealFunction& v, double p, double delta,
                    int budget, const ApOptions& opts = {});
ApReport ap_numeric(const PowerWeight& u, const PowerWeight& v, double p, double delta,
                    int budget);

// Exponent test for (u, v) in A_p^delta(-1, 1) with u, v power-like.
bool ap_power_pair(const PowerWeight& u, const PowerWeight& v, double p, double delta);
// Exponent test for w in L^1(-1, 1).
bool locally_integrable(const PowerWeight& w);

bool corollary_predicate(AlphaParam alpha, double p, double b, double A, double B);

struct TheoremConditions {
  bool thm1_applicable;  // alpha >= -1/2
  bool thm1;
  bool thm2_applicable;  // -1 < alpha < -1/2
  bool thm2;
  bool thm3_necessary;
  // Exponent weights of the A_p^delta pairs (one pair for alpha >= -1/2,
  // two otherwise).
  std::vector<std::pair<PowerWeight, PowerWeight>> pairs;
};

TheoremConditions theorem_conditions(AlphaParam alpha, double p, const PowerWeight& U,
                                     const PowerWeight& V, double delta = 1.0);

// Ag(x) = (1/x) int_0^x |g| + int_x^2 |g(y)|/y dy on (0, 2). +inf if divergent.
double calderon(const RealFunction& g, double x, std::span<const double> breakpoints = {});

// Jf(x) = int_{-1}^1 f(y) / (2 - x - y) dy.
double operator_j(const RealFunction& f, double x, std::span<const double> breakpoints = {});

// Hf(x) = p.v. int_{-1}^1 f(y) / (x - y) dy by symmetric exclusion with
// radii {1, 1e-1, 1e-2} * min(1e-2, distance to +-1 and breakpoints / 2)
// and Richardson extrapolation in the radius.
double hilbert(const RealFunction& f, double x, std::span<const double> breakpoints = {});

enum class ModelOperator { kCalderon, kHilbert, kJ };

std::optional<ModelOperator> parse_model_operator(const std::string& name);

struct ProbeRow {
  int trial;
  double freq;
  double ratio;  // NaN when the trial is skipped
  bool skipped;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  double max_ratio = 0.0;
  // Least-squares slope of log ratio against log freq over the upper half of
  // the trials.
  double growth_slope = 0.0;

  // Header `trial,freq,ratio`.
  void write_csv(std::ostream& out) const;
};

struct ProbeOptions {
  std::uint64_t seed = 1;
  // Polynomial bump supported on an interval of length 2^{-level} next to
  // the anchor; trial t uses level t (0-based).
  double anchor = 0.0;
  bool zero_function = false;  // exercises the skip path
};

// Ratios ||op f||_{L^p(u)} / ||f||_{L^p(v)} for `trials` random piecewise
// polynomial test functions of increasing localization (frequency 2^t).
ProbeReport boundedness_probe(ModelOperator op, const PowerWeight& u, const PowerWeight& v,
                              double p, int trials, const ProbeOptions& opts = {});

}  // namespace fdunkl
