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

#include "fdunkl/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>

#include <json.hpp>

#include "fdunkl/error.hpp"
#include "fdunkl/integrate.hpp"

namespace fdunkl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Points of [-1, 1] where a power-weight exponent condition must be checked.
std::vector<double> critical_points(std::initializer_list<const PowerWeight*> ws) {
  std::vector<double> pts{-1.0, 0.0, 1.0};
  for (const PowerWeight* w : ws) {
    for (const auto& f : w->factors()) {
      if (f.t >= -1.0 && f.t <= 1.0) pts.push_back(f.t);
    }
  }
  return sorted_unique(std::move(pts));
}

PowerWeight abs_x_power(double e) { return PowerWeight({{0.0, e}}); }

}  // namespace

std::string to_string(ApVerdict v) {
  switch (v) {
    case ApVerdict::kSatisfied: return "satisfied";
    case ApVerdict::kViolated: return "violated";
    case ApVerdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string ApReport::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["delta"] = delta;
  if (std::isfinite(constant_estimate)) {
    j["constant_estimate"] = constant_estimate;
  } else {
    j["constant_estimate"] = "inf";
  }
  j["verdict"] = to_string(verdict);
  if (witness_interval) {
    j["witness_interval"] = {witness_interval->lo, witness_interval->hi};
  } else {
    j["witness_interval"] = nullptr;
  }
  return j.dump();
}

ApReport ap_numeric(const RealFunction& u, const RealFunction& v, double p, double delta,
                    int budget, const ApOptions& opts) {
  require(p > 1.0, ErrorCode::kInvalidArgument, "A_p check needs p > 1");
  require(delta >= 1.0, ErrorCode::kInvalidArgument, "A_p^delta check needs delta >= 1");
  require(budget >= 1, ErrorCode::kInvalidArgument, "A_p scale budget must be >= 1");
  const double lo = opts.domain_lo, hi = opts.domain_hi;
  require(lo < hi, ErrorCode::kInvalidArgument, "empty A_p domain");

  ApReport rep;
  rep.p = p;
  rep.delta = delta;
  if (opts.trivial_pair) {
    rep.verdict = ApVerdict::kSatisfied;
    return rep;
  }

  std::vector<double> anchors{lo, hi};
  if (lo < 0.0 && hi > 0.0) anchors.push_back(0.0);
  for (double t : opts.anchors) {
    if (t >= lo && t <= hi) anchors.push_back(t);
  }
  anchors = sorted_unique(std::move(anchors));

  const double sigma_power = -delta / (p - 1.0);
  const RealFunction ud = [&](double x) { return std::pow(u(x), delta); };
  const RealFunction sd = [&](double x) { return std::pow(v(x), sigma_power); };

  const auto product = [&](Interval I) {
    const double len = I.hi - I.lo;
    const quad::Result iu = quad::piecewise(ud, I.lo, I.hi, anchors);
    if (iu.divergent || !std::isfinite(iu.value)) return kInf;
    if (iu.value == 0.0) return 0.0;
    const quad::Result is = quad::piecewise(sd, I.lo, I.hi, anchors);
    if (is.divergent || !std::isfinite(is.value)) return kInf;
    return (iu.value / len) * std::pow(is.value / len, p - 1.0);
  };

  double running = 0.0;
  std::vector<double> running_sup;
  for (int k = 0; k <= budget; ++k) {
    std::vector<Interval> family;
    const double h = (hi - lo) * std::ldexp(1.0, -k);
    if (k == 0) {
      family.push_back({lo, hi});
    } else {
      for (double t : anchors) {
        for (Interval I : {Interval{t - h, t}, Interval{t, t + h},
                           Interval{t - 0.5 * h, t + 0.5 * h}}) {
          I.lo = std::max(I.lo, lo);
          I.hi = std::min(I.hi, hi);
          if (I.hi > I.lo) family.push_back(I);
        }
      }
    }
    double best = 0.0;
    Interval best_interval{lo, hi};
    for (const Interval& I : family) {
      const double c = product(I);
      ++rep.intervals_tested;
      if (c > best || (c == kInf && best != kInf)) {
        best = c;
        best_interval = I;
      }
    }
    rep.scale_maxima.push_back(best);
    if (best >= running) {
      running = best;
      rep.witness_interval = best_interval;
    }
    running_sup.push_back(running);
    if (best == kInf) {
      rep.constant_estimate = kInf;
      rep.verdict = ApVerdict::kViolated;
      rep.witness_interval = best_interval;
      return rep;
    }
  }
  rep.constant_estimate = running;

  const auto& m = rep.scale_maxima;
  int streak = 0;
  for (std::size_t k = 1; k < m.size(); ++k) {
    streak = (m[k - 1] > 0.0 && m[k] >= 1.2 * m[k - 1]) ? streak + 1 : 0;
    if (streak >= 4) {
      rep.verdict = ApVerdict::kViolated;
      return rep;
    }
  }
  const std::size_t n = running_sup.size();
  if (n >= 5 && running_sup[n - 1] <= 1.05 * running_sup[n - 5]) {
    rep.verdict = ApVerdict::kSatisfied;
    rep.witness_interval.reset();
  } else {
    rep.verdict = ApVerdict::kInconclusive;
  }
  return rep;
}

ApReport ap_numeric(const PowerWeight& u, const PowerWeight& v, double p, double delta,
                    int budget) {
  ApOptions opts;
  for (double t : u.singular_points()) opts.anchors.push_back(t);
  for (double t : v.singular_points()) opts.anchors.push_back(t);
  return ap_numeric([&u](double x) { return u(x); }, [&v](double x) { return v(x); }, p,
                    delta, budget, opts);
}

bool ap_power_pair(const PowerWeight& u, const PowerWeight& v, double p, double delta) {
  require(p > 1.0 && delta >= 1.0, ErrorCode::kInvalidArgument,
          "A_p^delta exponent test needs p > 1 and delta >= 1");
  for (double t : critical_points({&u, &v})) {
    const double eu = delta * u.exponent_at(t);
    const double ev = delta * v.exponent_at(t);
    // u^delta integrable, v^{-delta/(p-1)} integrable, and the averages'
    // product stays bounded as intervals shrink to t.
    if (!(eu > -1.0) || !(ev < p - 1.0) || !(eu >= ev)) return false;
  }
  return true;
}

bool locally_integrable(const PowerWeight& w) {
  for (const auto& f : w.factors()) {
    if (f.t >= -1.0 && f.t <= 1.0 && !(f.gamma > -1.0)) return false;
  }
  return true;
}

bool corollary_predicate(AlphaParam alpha, double p, double b, double A, double B) {
  require(p > 1.0, ErrorCode::kInvalidArgument, "corollary predicate needs p > 1");
  const double a = alpha.value();
  const double plus = std::max(a + 0.5, 0.0);
  const double mid = b * p + 2.0 * a + 1.0;
  return -1.0 < A * p && A * p < p - 1.0 &&  //
         -1.0 < B * p && B * p < p - 1.0 &&  //
         -1.0 + p * plus < mid && mid < p - 1.0 + p * (2.0 * a + 1.0) - p * plus;
}

TheoremConditions theorem_conditions(AlphaParam alpha, double p, const PowerWeight& U,
                                     const PowerWeight& V, double delta) {
  require(p > 1.0, ErrorCode::kInvalidArgument, "theorem conditions need p > 1");
  require(delta >= 1.0, ErrorCode::kInvalidArgument, "delta must be >= 1");
  const double a = alpha.value();
  const double pc = p / (p - 1.0);
  const PowerWeight Up = U.pow(p), Vp = V.pow(p);

  TheoremConditions out{};
  out.thm1_applicable = a >= -0.5;
  out.thm2_applicable = !out.thm1_applicable;
  if (out.thm1_applicable) {
    const PowerWeight x1 = abs_x_power((a + 0.5) * (2.0 - p));
    out.pairs.emplace_back(Up * x1, Vp * x1);
    out.thm1 = ap_power_pair(Up * x1, Vp * x1, p, delta);
  } else {
    const PowerWeight x1 = abs_x_power((2.0 * a + 1.0) * (1.0 - p));
    const PowerWeight x2 = abs_x_power(2.0 * a + 1.0);
    out.pairs.emplace_back(Up * x1, Vp * x1);
    out.pairs.emplace_back(Up * x2, Vp * x2);
    out.thm2 = ap_power_pair(Up * x1, Vp * x1, p, delta) &&
               ap_power_pair(Up * x2, Vp * x2, p, delta);
  }

  bool dominated = true;  // U <= C V a.e.
  for (double t : critical_points({&U, &V})) {
    if (U.exponent_at(t) < V.exponent_at(t)) dominated = false;
  }
  const PowerWeight Vpc = V.pow(-pc);
  out.thm3_necessary = dominated &&
                       locally_integrable(Up * abs_x_power((a + 0.5) * (2.0 - p))) &&
                       locally_integrable(Vpc * abs_x_power((a + 0.5) * (2.0 - pc))) &&
                       locally_integrable(Up * abs_x_power(2.0 * a + 1.0)) &&
                       locally_integrable(Vpc * abs_x_power(2.0 * a + 1.0));
  return out;
}

double calderon(const RealFunction& g, double x, std::span<const double> breakpoints) {
  require(x > 0.0 && x < 2.0, ErrorCode::kDomain, "Calderon operator needs 0 < x < 2");
  const RealFunction absg = [&](double y) { return std::abs(g(y)); };
  const RealFunction tail = [&](double y) { return std::abs(g(y)) / y; };
  const quad::Result hardy = quad::piecewise(absg, 0.0, x, breakpoints);
  const quad::Result adjoint = quad::piecewise(tail, x, 2.0, breakpoints);
  if (hardy.divergent || adjoint.divergent) return kInf;
  return hardy.value / x + adjoint.value;
}

double operator_j(const RealFunction& f, double x, std::span<const double> breakpoints) {
  require(x > -1.0 && x < 1.0, ErrorCode::kDomain, "operator J needs -1 < x < 1");
  const RealFunction integrand = [&](double y) { return f(y) / (2.0 - x - y); };
  const quad::Result r = quad::piecewise(integrand, -1.0, 1.0, breakpoints);
  return r.value;
}

double hilbert(const RealFunction& f, double x, std::span<const double> breakpoints) {
  require(x > -1.0 && x < 1.0, ErrorCode::kDomain, "Hilbert transform needs -1 < x < 1");
  double radius = std::min(1e-2, 0.5 * (1.0 - std::abs(x)));
  for (double b : breakpoints) {
    require(b != x, ErrorCode::kDomain,
            "principal value requested at a breakpoint of the integrand");
    radius = std::min(radius, 0.5 * std::abs(x - b));
  }
  // In u = |x - y| the kernel is an exact 1/u, so panels close to x carry
  // no cancellation noise from forming x - y.
  const double left_len = 1.0 + x, right_len = 1.0 - x;
  const double m = std::min(left_len, right_len);
  std::vector<double> cuts{m};
  for (double b : breakpoints) cuts.push_back(std::abs(x - b));

  const RealFunction odd_part = [&](double u) { return (f(x - u) - f(x + u)) / u; };
  // f(x-u) - f(x+u) is only good to about eps |f| / u, so a 1e-12 request
  // would chase rounding; the extrapolation below is checked to 1e-7 anyway.
  quad::GradedOptions opts;
  opts.rel_tol = 1e-10;
  opts.max_depth = 12;
  opts.abs_tol = 1e-12 * (1.0 + std::abs(f(x)));
  const auto piece = [&](const RealFunction& g, double a, double b) {
    const quad::Result r = quad::piecewise(g, a, b, cuts, opts);
    require(!r.divergent && std::isfinite(r.value), ErrorCode::kConvergence,
            "Hilbert transform integrand is not integrable away from x");
    return r.value;
  };
  double tail = 0.0;
  if (left_len > m) {
    tail = piece([&](double u) { return f(x - u) / u; }, m, left_len);
  } else if (right_len > m) {
    tail = -piece([&](double u) { return f(x + u) / u; }, m, right_len);
  }

  double h[3];
  h[0] = tail + piece(odd_part, radius, m);
  h[1] = h[0] + piece(odd_part, 0.1 * radius, radius);
  h[2] = h[1] + piece(odd_part, 0.01 * radius, 0.1 * radius);
  // H_eps = H + c1 eps + c3 eps^3 + ...
  const double r1 = (10.0 * h[1] - h[0]) / 9.0;
  const double r2 = (10.0 * h[2] - h[1]) / 9.0;
  const double result = (1000.0 * r2 - r1) / 999.0;
  const double scale = 1.0 + std::abs(result) + std::abs(h[0]);
  if (!(std::abs(r2 - result) <= 1e-7 * scale)) {
    fail(ErrorCode::kConvergence,
         "principal-value extrapolation did not settle at x = " + std::to_string(x));
  }
  return result;
}

std::optional<ModelOperator> parse_model_operator(const std::string& name) {
  if (name == "calderon") return ModelOperator::kCalderon;
  if (name == "hilbert") return ModelOperator::kHilbert;
  if (name == "j") return ModelOperator::kJ;
  return std::nullopt;
}

void ProbeReport::write_csv(std::ostream& out) const {
  out << "trial,freq,ratio\n";
  char buf[96];
  for (const ProbeRow& r : rows) {
    if (r.skipped) {
      std::snprintf(buf, sizeof buf, "%d,%.17g,nan\n", r.trial, r.freq);
    } else {
      std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", r.trial, r.freq, r.ratio);
    }
    out << buf;
  }
}

namespace {

// Two quadratic pieces on [lo, hi], zero elsewhere.
struct TestFunction {
  double lo, mid, hi;
  double c[2][3];

  double operator()(double y) const {
    if (y < lo || y > hi) return 0.0;
    const int piece = y < mid ? 0 : 1;
    const double a = piece == 0 ? lo : mid;
    const double b = piece == 0 ? mid : hi;
    const double s = (y - a) / (b - a);
    return c[piece][0] + s * (c[piece][1] + s * c[piece][2]);
  }
};

}  // namespace

ProbeReport boundedness_probe(ModelOperator op, const PowerWeight& u, const PowerWeight& v,
                              double p, int trials, const ProbeOptions& opts) {
  require(p > 1.0, ErrorCode::kInvalidArgument, "probe needs p > 1");
  require(trials >= 1, ErrorCode::kInvalidArgument, "probe needs at least one trial");
  const bool half_line = op == ModelOperator::kCalderon;
  const double dom_lo = half_line ? 0.0 : -1.0;
  const double dom_hi = half_line ? 2.0 : 1.0;
  const double anchor = std::clamp(opts.anchor, dom_lo, dom_hi);

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  quad::GradedOptions outer;
  // The inner operators are accurate to about 1e-7; asking more of the
  // outer rule only chases their noise.
  outer.levels = 30;
  outer.rel_tol = 1e-6;
  outer.extrapolate_tail = false;
  outer.max_depth = 10;

  ProbeReport rep;
  for (int t = 0; t < trials; ++t) {
    const double len = 0.5 * (dom_hi - dom_lo) * std::ldexp(1.0, -t);
    TestFunction g{};
    if (anchor + len <= dom_hi) {
      g.lo = anchor;
      g.hi = anchor + len;
    } else {
      g.lo = anchor - len;
      g.hi = anchor;
    }
    g.mid = 0.5 * (g.lo + g.hi);
    for (auto& piece : g.c) {
      piece[0] = 1.0 + 0.5 * unit(rng);
      piece[1] = unit(rng);
      piece[2] = unit(rng);
    }
    ProbeRow row{t, std::ldexp(1.0, t), std::numeric_limits<double>::quiet_NaN(), true};
    if (opts.zero_function) {
      rep.rows.push_back(row);
      continue;
    }

    const std::vector<double> fcuts{g.lo, g.mid, g.hi};
    std::vector<double> cuts = fcuts;
    for (double s : u.singular_points()) cuts.push_back(s);
    for (double s : v.singular_points()) cuts.push_back(s);
    cuts.push_back(anchor);
    cuts = sorted_unique(std::move(cuts));

    const RealFunction f = [&g](double y) { return g(y); };
    const RealFunction num_integrand = [&](double x) {
      double val = 0.0;
      switch (op) {
        case ModelOperator::kCalderon: val = calderon(f, x, fcuts); break;
        case ModelOperator::kHilbert: val = hilbert(f, x, fcuts); break;
        case ModelOperator::kJ: val = operator_j(f, x, fcuts); break;
      }
      return std::pow(std::abs(val), p) * u(x);
    };
    const RealFunction den_integrand = [&](double y) {
      return std::pow(std::abs(g(y)), p) * v(y);
    };
    const quad::Result den = quad::piecewise(den_integrand, g.lo, g.hi, cuts);
    if (den.divergent || !(den.value > 0.0) || !std::isfinite(den.value)) {
      rep.rows.push_back(row);
      continue;
    }
    try {
      const quad::Result num = quad::piecewise(num_integrand, dom_lo, dom_hi, cuts, outer);
      row.ratio = std::pow(num.value, 1.0 / p) / std::pow(den.value, 1.0 / p);
      row.skipped = !std::isfinite(row.ratio);
    } catch (const Error&) {
      row.skipped = true;
    }
    if (!row.skipped) rep.max_ratio = std::max(rep.max_ratio, row.ratio);
    rep.rows.push_back(row);
  }

  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = rep.rows.size() / 2; i < rep.rows.size(); ++i) {
    const ProbeRow& r = rep.rows[i];
    if (!r.skipped && r.ratio > 0.0) pts.emplace_back(std::log(r.freq), std::log(r.ratio));
  }
  if (pts.size() >= 2) {
    double mx = 0, my = 0;
    for (auto [x, y] : pts) {
      mx += x;
      my += y;
    }
    mx /= pts.size();
    my /= pts.size();
    double sxy = 0, sxx = 0;
    for (auto [x, y] : pts) {
      sxy += (x - mx) * (y - my);
      sxx += (x - mx) * (x - mx);
    }
    rep.growth_slope = sxx > 0 ? sxy / sxx : 0.0;
  }
  return rep;
}

}  // namespace fdunkl
