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

// The orthonormal system e_j on (L^2(-1,1), d mu_alpha), Fourier-Dunkl
// coefficients and partial sums, the partial-sum kernel K_n in its summed and
// Bessel closed forms, and the splitting of S_n into T1 + T2 + T3.

#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

#include "fdunkl/measure.hpp"
#include "fdunkl/specfun.hpp"

namespace fdunkl {

class DunklSystem {
 public:
  // Supports |j| <= n_max; the zero table is built one entry further so that
  // M_{n_max} exists.
  DunklSystem(AlphaParam alpha, int n_max);

  AlphaParam alpha() const noexcept { return alpha_; }
  int n_max() const noexcept { return n_max_; }
  const ZeroTable& zeros() const noexcept { return zeros_; }

  // s_j with s_{-j} = -s_j and s_0 = 0.
  double frequency(int j) const;
  // 2^{alpha/2} Gamma(alpha+1)^{1/2} / |I_alpha(i s_j)| for j != 0; e_0 for j = 0.
  double norm_constant(int j) const;
  // e_0 = 2^{(alpha+1)/2} Gamma(alpha+2)^{1/2}.
  double e0() const noexcept { return e0_; }

  std::complex<double> eval_e(int j, double x) const;

 private:
  void check_index(int j) const;

  AlphaParam alpha_;
  int n_max_;
  ZeroTable zeros_;
  double e0_;
  double scale_;  // 2^alpha Gamma(alpha+1)
  std::vector<double> norm_constants_;  // index j = 1..n_max
};

// Coefficients c_j, |j| <= degree.
class SeriesExpansion {
 public:
  SeriesExpansion(AlphaParam alpha, int degree, std::vector<std::complex<double>> coeffs);

  AlphaParam alpha() const noexcept { return alpha_; }
  int degree() const noexcept { return degree_; }
  std::complex<double> coefficient(int j) const;
  const std::vector<std::complex<double>>& coefficients() const noexcept {
    return coeffs_;
  }

  // Header `j,re_cj,im_cj`, ascending j.
  void write_csv(std::ostream& out) const;

 private:
  AlphaParam alpha_;
  int degree_;
  std::vector<std::complex<double>> coeffs_;  // index j + degree
};

SeriesExpansion expand(const DunklSystem& system, const QuadratureRule& rule,
                       const ComplexFunction& f, int n);
SeriesExpansion expand(const DunklSystem& system, const QuadratureRule& rule,
                       const RealFunction& f, int n);

template <PlainCallable F>
SeriesExpansion expand(const DunklSystem& system, const QuadratureRule& rule, const F& f,
                       int n) {
  return expand(system, rule, FunctionFor<F>(f), n);
}

std::complex<double> partial_sum(const SeriesExpansion& expansion,
                                 const DunklSystem& system, double x);

// K_n(x, y) = sum_{|j|<=n} e_j(x) conj(e_j(y)); real for real x, y.
double kernel_direct(const DunklSystem& system, int n, double x, double y);

// 2^{alpha+1}Gamma(alpha+2) + 2^{alpha+1}Gamma(alpha+1)(xy)^{-alpha}
//   sum_{j<=n} [J_a(s_j x)J_a(s_j y) + J_{a+1}(s_j x)J_{a+1}(s_j y)] / J_a(s_j)^2,
// with J_nu(s x)/x^nu read as the even function. Needs x, y != 0.
double kernel_closed_sum_form(const DunklSystem& system, int n, double x, double y);

// B(M, x, y) = 2^a Gamma(a+1) M x J_{a+1}(M|x|) J_a(M|y|) / (|x|^{a+1}|y|^a (x-y)).
double b_function(const DunklSystem& system, double M, double x, double y);

struct RemainderBound {
  double residual;  // |K_n(x,y) - B(M_n,x,y) - B(M_n,y,x)|
  double bound;     // |xy|^{-(alpha+1/2)} / (2-|x|-|y|) + 1
};

RemainderBound remainder_bound_check(const DunklSystem& system, int n, double x,
                                     double y);

struct TSplit {
  double t1;
  double t2;
  double t3;
  double partial_sum;
};

// S_n f(x) = T1 + T2 + T3 with T1, T2 the principal-value integrals of f
// against B(M_n, x, .) and B(M_n, ., x). S_n f(x) uses the rule; T1, T2 are
// computed adaptively. `breakpoints` lists points where f is not smooth.
TSplit t_split(const DunklSystem& system, const QuadratureRule& rule,
               const RealFunction& f, int n, double x,
               std::span<const double> breakpoints = {});

// Header `x,y,K_direct,B_sum,residual,bound`.
void write_kernel_grid_csv(std::ostream& out, const DunklSystem& system, int n,
                           std::span<const double> xs, std::span<const double> ys);

}  // namespace fdunkl
