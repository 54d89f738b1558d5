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

// Reference computations used by the tests. They are deliberately written
// independently of the library code paths they check.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

// J_nu(z) from 60 terms of its power series in long double.
inline double bessel_series(double nu, double z) {
  long double sum = 0.0L;
  long double term = std::pow(static_cast<long double>(z) / 2.0L, nu) /
                     std::tgamma(static_cast<long double>(nu) + 1.0L);
  const long double q = -static_cast<long double>(z) * z / 4.0L;
  for (int k = 0; k < 60; ++k) {
    sum += term;
    term *= q / ((k + 1.0L) * (k + 1.0L + nu));
  }
  return static_cast<double>(sum);
}

// J_1 from 60 terms of its power series in 50-digit arithmetic; the terms
// reach about 1e12 near z = 32, which long double cannot absorb.
inline double j1_series_mp(double z) {
  using mp = boost::multiprecision::cpp_bin_float_50;
  const mp x(z);
  const mp q = -x * x / 4;
  mp term = x / 2, sum = 0;
  for (int k = 0; k < 60; ++k) {
    sum += term;
    term *= q / ((k + 1) * (k + 2));
  }
  return static_cast<double>(sum);
}

// First n positive zeros of J_1, found by scanning the truncated series with
// step 0.1 and bisecting each sign change down to width 1e-14.
inline std::vector<double> j1_zeros_by_bisection(int n) {
  std::vector<double> out;
  double a = 0.5;
  double fa = j1_series_mp(a);
  while (static_cast<int>(out.size()) < n) {
    const double b = a + 0.1;
    const double fb = j1_series_mp(b);
    if ((fa < 0) != (fb < 0)) {
      double lo = a, hi = b, flo = fa;
      while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        const double fm = j1_series_mp(mid);
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      out.push_back(0.5 * (lo + hi));
    }
    a = b;
    fa = fb;
  }
  return out;
}

// Sine and cosine integrals by their power series in long double; adequate
// for |z| up to about 20.
inline double si(double z) {
  long double sum = 0.0L, term = z;  // z^{2k+1}/(2k+1)!
  for (int k = 0; k < 120; ++k) {
    sum += term / (2 * k + 1);
    term *= -static_cast<long double>(z) * z / ((2.0L * k + 2) * (2.0L * k + 3));
  }
  return static_cast<double>(sum);
}

inline double ci(double z) {
  const long double euler = 0.57721566490153286060651209L;
  long double sum = 0.0L, term = -static_cast<long double>(z) * z / 2.0L;  // (-1)^k z^{2k}/(2k)!
  for (int k = 1; k < 120; ++k) {
    sum += term / (2 * k);
    term *= -static_cast<long double>(z) * z / ((2.0L * k + 1) * (2.0L * k + 2));
  }
  return static_cast<double>(euler + std::log(static_cast<long double>(z)) + sum);
}

// PV int_{-1}^{1} cos(M y) / (x - y) dy and the sine analogue, via u = x - y.
inline double pv_cos_over(double M, double x) {
  const double a = M * (x + 1.0), b = M * std::abs(x - 1.0);
  // int_{x-1}^{x+1} cos(M(x-u))/u du
  //   = cos(Mx) [Ci(a) - Ci(b)] + sin(Mx) [Si(a) - Si(M(x-1))]
  return std::cos(M * x) * (ci(a) - ci(b)) + std::sin(M * x) * (si(a) - si(M * (x - 1.0)));
}

inline double pv_sin_over(double M, double x) {
  const double a = M * (x + 1.0), b = M * std::abs(x - 1.0);
  return std::sin(M * x) * (ci(a) - ci(b)) - std::cos(M * x) * (si(a) - si(M * (x - 1.0)));
}

// Density of d mu_alpha.
inline double mu_density(double alpha, double x) {
  return std::pow(std::abs(x), 2 * alpha + 1) / (std::pow(2.0, alpha + 1) * std::tgamma(alpha + 1));
}

// int_{-1}^{1} f d mu_alpha by tanh-sinh quadrature on each half.
template <class F>
double mu_integral(double alpha, F f) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const auto g = [&](double x) { return f(x) * mu_density(alpha, x); };
  return ts.integrate(g, -1.0, 0.0) + ts.integrate(g, 0.0, 1.0);
}

// Normalised Dirichlet-type kernel for alpha = -1/2, where e_j(x) =
// c e^{i pi j x} with c^2 = sqrt(pi/2).
inline double dirichlet_kernel(int n, double x, double y) {
  const double c2 = std::sqrt(std::numbers::pi / 2.0);
  const double d = std::numbers::pi * (x - y);
  if (std::abs(std::sin(d / 2)) < 1e-14) return c2 * (2 * n + 1);
  return c2 * std::sin((n + 0.5) * d) / std::sin(d / 2);
}

}  // namespace oracle
