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

// Bessel-type special functions on the real line and the positive zeros of
// J_{alpha+1}.
//
// Conventions:
//   bessel_j_even(nu, z) = J_nu(z) / z^nu, taken as the entire even function
//       sum_n (-1)^n (z/2)^{2n} / (2^nu n! Gamma(nu+n+1)).
//   script_i(alpha, z)   = Gamma(alpha+1) sum_n (z/2)^{2n} / (n! Gamma(n+alpha+1)).
//   e_alpha(alpha, z)    = script_i(alpha, z) + z/(2(alpha+1)) script_i(alpha+1, z).

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace fdunkl {

// Order parameter; every object built from it assumes alpha > -1.
class AlphaParam {
 public:
  explicit AlphaParam(double alpha);

  double value() const noexcept { return alpha_; }

  friend bool operator==(AlphaParam a, AlphaParam b) noexcept {
    return a.alpha_ == b.alpha_;
  }

 private:
  double alpha_;
};

// Largest |z| accepted by bessel_j_even / bessel_j before a range error.
inline constexpr double kBesselArgumentCap = 1.0e6;
// Largest |z| accepted by script_i on the real axis (exp(700) is near the
// double overflow threshold).
inline constexpr double kScriptIArgumentCap = 700.0;

// Gamma function for real x (Lanczos, g = 7, with reflection below 1/2).
double gamma_fn(double x);

double bessel_j_even(double nu, double z);
double bessel_j(double nu, double z);

double script_i(AlphaParam alpha, double z);
std::complex<double> script_i(AlphaParam alpha, std::complex<double> z);

std::complex<double> e_alpha(AlphaParam alpha, std::complex<double> z);

// E_alpha(i t) for real t, through the Bessel form
// 2^alpha Gamma(alpha+1) (J_alpha(t)/t^alpha + i t J_{alpha+1}(t)/t^{alpha+1}).
std::complex<double> e_alpha_imaginary_axis(AlphaParam alpha, double t);

// Positive zeros s_1 < s_2 < ... of J_{alpha+1}. Immutable once built.
class ZeroTable {
 public:
  ZeroTable(AlphaParam alpha, std::vector<double> zeros);

  AlphaParam alpha() const noexcept { return alpha_; }
  int count() const noexcept { return static_cast<int>(zeros_.size()); }

  // 1-based, s_j for 1 <= j <= count().
  double zero(int j) const;
  // M_n = (s_n + s_{n+1}) / 2 for 1 <= n < count().
  double midpoint(int n) const;

  const std::vector<double>& zeros() const noexcept { return zeros_; }

  // Header `j,s_j`, 17 significant digits.
  void write_csv(std::ostream& out) const;

 private:
  AlphaParam alpha_;
  std::vector<double> zeros_;
};

ZeroTable build_zero_table(AlphaParam alpha, int n_max);

}  // namespace fdunkl
