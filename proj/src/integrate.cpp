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

#include "fdunkl/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace fdunkl::quad {

namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double kronrod;
  double gauss;
  double abs_kronrod;
};

Panel gk15(const RealFn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = kWgk[7] * fc;
  double g = kWg[3] * fc;
  double ka = kWgk[7] * std::abs(fc);
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    k += kWgk[i] * (f1 + f2);
    ka += kWgk[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) g += kWg[i / 2] * (f1 + f2);
  }
  return {k * h, g * h, ka * std::abs(h)};
}

void adapt(const RealFn& f, double a, double b, double rel_tol, double abs_tol,
           int depth, Result& acc) {
  const Panel p = gk15(f, a, b);
  const double err = std::abs(p.kronrod - p.gauss);
  if (err <= std::max(abs_tol, rel_tol * p.abs_kronrod) || depth <= 0 ||
      !std::isfinite(p.kronrod)) {
    acc.value += p.kronrod;
    acc.error += err;
    return;
  }
  const double m = 0.5 * (a + b);
  adapt(f, a, m, rel_tol, 0.5 * abs_tol, depth - 1, acc);
  adapt(f, m, b, rel_tol, 0.5 * abs_tol, depth - 1, acc);
}

// Integral over [end, end + dir*len] with panels shrinking toward `end`.
Result grade_toward(const RealFn& f, double end, double len, double dir,
                    const GradedOptions& opts) {
  Result out;
  std::vector<double> contrib;
  contrib.reserve(opts.levels);
  double sum = 0.0;
  double abs_sum = 0.0;
  bool converged = false;
  for (int k = 0; k < opts.levels; ++k) {
    const double outer = len * std::ldexp(1.0, -k);
    const double inner = 0.5 * outer;
    double lo = end + dir * inner;
    double hi = end + dir * outer;
    // Panels a few ulps wide would put nodes on `end` itself; the tail
    // estimate below covers what is left.
    if (std::abs(lo - end) < 64.0 * std::numeric_limits<double>::epsilon() *
                                 std::max(1.0, std::abs(end))) {
      break;
    }
    if (lo > hi) std::swap(lo, hi);
    // Panels near a zero of f are tiny; judge them against the integral so
    // far rather than their own size, which would chase rounding noise.
    const double abs_tol = std::max({1e-300, opts.abs_tol, 1e-2 * opts.rel_tol * abs_sum});
    Result piece = gauss_kronrod(f, lo, hi, opts.rel_tol, abs_tol, opts.max_depth);
    contrib.push_back(piece.value);
    sum += piece.value;
    abs_sum += std::abs(piece.value);
    out.error += piece.error;
    const std::size_t n = contrib.size();
    if (n >= 4) {
      const double scale = std::max(std::abs(sum), 1e-300);
      if (std::abs(contrib[n - 1]) <= opts.rel_tol * scale &&
          std::abs(contrib[n - 2]) <= opts.rel_tol * scale) {
        converged = true;
        break;
      }
    }
  }
  out.value = sum;
  const std::size_t n = contrib.size();
  if (n < 3) return out;

  const double c1 = contrib[n - 1], c2 = contrib[n - 2], c3 = contrib[n - 3];
  if (c1 == 0.0 || c2 == 0.0 || c3 == 0.0) return out;
  const double r1 = c1 / c2;
  const double r2 = c2 / c3;
  if (!(r1 > 0.0 && r2 > 0.0) || std::abs(r1 - r2) > 0.1 * r1) return out;
  if (r1 >= 0.99) {
    if (converged) return out;
    if (opts.extrapolate_tail) {
      out.divergent = true;
      out.value = std::copysign(std::numeric_limits<double>::infinity(), c1);
    }
    return out;
  }
  if (opts.extrapolate_tail) {
    const double tail = c1 * r1 / (1.0 - r1);
    out.value += tail;
    out.error += std::abs(tail) * std::abs(r1 - r2);
  }
  return out;
}

}  // namespace

Result gauss_kronrod(const RealFn& f, double a, double b, double rel_tol,
                     double abs_tol, int max_depth) {
  Result acc;
  if (a == b) return acc;
  adapt(f, a, b, rel_tol, abs_tol, max_depth, acc);
  return acc;
}

Result graded(const RealFn& f, double a, double b, const GradedOptions& opts) {
  Result out;
  if (a == b) return out;
  const double sign = b > a ? 1.0 : -1.0;
  const double lo = std::min(a, b), hi = std::max(a, b);
  const double half = 0.5 * (hi - lo);
  const Result left = grade_toward(f, lo, half, +1.0, opts);
  const Result right = grade_toward(f, hi, half, -1.0, opts);
  out.divergent = left.divergent || right.divergent;
  out.value = sign * (left.value + right.value);
  out.error = left.error + right.error;
  return out;
}

Result piecewise(const RealFn& f, double a, double b,
                 std::span<const double> breakpoints, const GradedOptions& opts) {
  const double lo = std::min(a, b), hi = std::max(a, b);
  std::vector<double> cuts{lo};
  for (double t : breakpoints) {
    if (t > lo && t < hi) cuts.push_back(t);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  Result out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Result r = graded(f, cuts[i], cuts[i + 1], opts);
    out.value += r.value;
    out.error += r.error;
    out.divergent = out.divergent || r.divergent;
  }
  if (b < a) out.value = -out.value;
  return out;
}

}  // namespace fdunkl::quad
