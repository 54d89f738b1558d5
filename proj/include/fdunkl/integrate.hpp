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

// One-dimensional quadrature used by the operator and weight code:
// adaptive Gauss-Kronrod on smooth pieces, and a graded scheme that
// resolves algebraic endpoint singularities and reports divergence.

#include <functional>
#include <span>

namespace fdunkl::quad {

using RealFn = std::function<double(double)>;

struct Result {
  double value = 0.0;
  double error = 0.0;
  bool divergent = false;
};

// Adaptive 7/15-point Gauss-Kronrod with bisection down to `max_depth`.
Result gauss_kronrod(const RealFn& f, double a, double b, double rel_tol = 1e-12,
                     double abs_tol = 1e-15, int max_depth = 30);

struct GradedOptions {
  // Panels [e + L 2^{-k-1}, e + L 2^{-k}], k < levels, graded toward each end e.
  int levels = 60;
  double rel_tol = 1e-12;
  // Geometric-tail extrapolation and divergence detection below the last
  // panel. When off, the region closer than L 2^{-levels} is dropped.
  bool extrapolate_tail = true;
  // Bisection depth of the adaptive rule on each panel.
  int max_depth = 30;
  // Absolute tolerance per panel, for integrands whose rounding noise is
  // known to the caller.
  double abs_tol = 0.0;
};

// Integral over [a, b], where f may blow up (integrably or not) at either
// endpoint. A panel-to-panel growth ratio >= ~1 near an endpoint is reported
// as divergent with value +inf (or -inf).
Result graded(const RealFn& f, double a, double b, const GradedOptions& opts = {});

// graded() on every piece of [a, b] cut at the interior breakpoints.
Result piecewise(const RealFn& f, double a, double b,
                 std::span<const double> breakpoints,
                 const GradedOptions& opts = {});

}  // namespace fdunkl::quad
