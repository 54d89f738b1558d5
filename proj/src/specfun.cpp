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

#include "fdunkl/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "fdunkl/error.hpp"

namespace fdunkl {

namespace {

using std::numbers::pi;

constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoeffs[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Below this argument J_nu(z)/z^nu is summed as a power series in extended
// precision. Both branches stay within ~4e-13 absolute of J_nu at the cut.
constexpr double kSeriesCut = 13.5;
constexpr double kZeroScanStep = 0.5;
constexpr double kBisectWidth = 1e-6;

// Hankel's large-argument expansion of J_nu(x), x > 0, truncated at its
// smallest term.
double bessel_j_asymptotic(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    const double mag = std::abs(term);
    if (mag >= prev) break;
    prev = mag;
    // Signs follow P = a0 - a2/x^2 + a4/x^4 ..., Q = a1/x - a3/x^3 ...
    switch (k % 4) {
      case 0: p += term; break;
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
    }
    if (mag < 1e-17) break;
  }
  const double phase = (0.5 * nu + 0.25) * pi;
  // cos(x - phase) and sin(x - phase) via angle addition so that argument
  // reduction is done on x alone.
  const double cx = std::cos(x), sx = std::sin(x);
  const double cp = std::cos(phase), sp = std::sin(phase);
  const double cos_chi = cx * cp + sx * sp;
  const double sin_chi = sx * cp - cx * sp;
  return std::sqrt(2.0 / (pi * x)) * (p * cos_chi - q * sin_chi);
}

// J_nu(x) for x >= kSeriesCut and nu < x; large orders are reached by the
// (stable for nu < x) upward recurrence from two small orders.
double bessel_j_large(double nu, double x) {
  if (nu <= 2.0) return bessel_j_asymptotic(nu, x);
  const double steps = std::floor(nu);
  double lo = nu - steps;
  double j_prev = bessel_j_asymptotic(lo, x);
  double j_cur = bessel_j_asymptotic(lo + 1.0, x);
  for (double mu = lo + 1.0; mu < nu - 0.5; mu += 1.0) {
    const double next = 2.0 * mu / x * j_cur - j_prev;
    j_prev = j_cur;
    j_cur = next;
  }
  return j_cur;
}

long double bessel_even_series(double nu, double z) {
  const long double q = 0.25L * static_cast<long double>(z) * z;
  long double term =
      1.0L / (std::pow(2.0L, static_cast<long double>(nu)) * gamma_fn(nu + 1.0));
  long double sum = term;
  long double biggest = std::abs(term);
  for (int n = 0; n < 1000; ++n) {
    term *= -q / ((n + 1.0L) * (nu + n + 1.0L));
    sum += term;
    const long double mag = std::abs(term);
    biggest = std::max(biggest, mag);
    if (n + 1 > q && mag < 1e-21L * biggest) break;
  }
  return sum;
}

bool use_series(double nu, double z) { return z < kSeriesCut || nu >= z; }

void check_order(double nu) {
  require(nu > -1.0, ErrorCode::kDomain, "Bessel order must exceed -1");
}

}  // namespace

AlphaParam::AlphaParam(double alpha) : alpha_(alpha) {
  require(std::isfinite(alpha) && alpha > -1.0, ErrorCode::kInvalidArgument,
          "alpha must be a finite number greater than -1");
}

double gamma_fn(double x) {
  require(std::isfinite(x), ErrorCode::kDomain, "gamma of a non-finite value");
  if (x <= 0.0 && x == std::floor(x)) {
    fail(ErrorCode::kDomain, "gamma has a pole at a non-positive integer");
  }
  if (x < 0.5) return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
  if (x <= 23.0 && x == std::floor(x)) {
    // (x-1)! is exact in double up to 22!.
    double f = 1.0;
    for (int k = 2; k < static_cast<int>(x); ++k) f *= k;
    return f;
  }
  const double z = x - 1.0;
  double acc = kLanczosCoeffs[0];
  for (int i = 1; i < 9; ++i) acc += kLanczosCoeffs[i] / (z + i);
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

double bessel_j_even(double nu, double z) {
  check_order(nu);
  const double x = std::abs(z);
  require(x <= kBesselArgumentCap, ErrorCode::kRange,
          "bessel_j_even argument beyond supported cap");
  if (use_series(nu, x)) return static_cast<double>(bessel_even_series(nu, x));
  return bessel_j_large(nu, x) * std::pow(x, -nu);
}

double bessel_j(double nu, double z) {
  check_order(nu);
  require(z > 0.0, ErrorCode::kDomain, "bessel_j needs a positive argument");
  require(z <= kBesselArgumentCap, ErrorCode::kRange,
          "bessel_j argument beyond supported cap");
  if (use_series(nu, z)) {
    return static_cast<double>(bessel_even_series(nu, z) *
                               std::pow(static_cast<long double>(z), nu));
  }
  return bessel_j_large(nu, z);
}

double script_i(AlphaParam alpha, double z) {
  require(std::abs(z) <= kScriptIArgumentCap, ErrorCode::kRange,
          "script_i argument beyond overflow cap");
  const double a = alpha.value();
  const long double q = 0.25L * static_cast<long double>(z) * z;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int n = 0; n < 4000; ++n) {
    term *= q / ((n + 1.0L) * (a + n + 1.0L));
    sum += term;
    if (n + 1 > q && term < 1e-20L * sum) break;
  }
  return static_cast<double>(sum);
}

std::complex<double> script_i(AlphaParam alpha, std::complex<double> z) {
  require(std::abs(z) <= kScriptIArgumentCap, ErrorCode::kRange,
          "script_i argument beyond overflow cap");
  const double a = alpha.value();
  // The power series cancels badly on the imaginary axis; use J there.
  if (z.real() == 0.0) {
    return std::pow(2.0, a) * gamma_fn(a + 1.0) * bessel_j_even(a, z.imag());
  }
  using cld = std::complex<long double>;
  const cld zz(z.real(), z.imag());
  const cld q = 0.25L * zz * zz;
  const long double qabs = std::abs(q);
  cld term = 1.0L;
  cld sum = 1.0L;
  long double biggest = 1.0L;
  for (int n = 0; n < 4000; ++n) {
    term *= q / ((n + 1.0L) * (a + n + 1.0L));
    sum += term;
    const long double mag = std::abs(term);
    biggest = std::max(biggest, mag);
    if (n + 1 > qabs && mag < 1e-21L * biggest) break;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

std::complex<double> e_alpha_imaginary_axis(AlphaParam alpha, double t) {
  const double a = alpha.value();
  const double scale = std::pow(2.0, a) * gamma_fn(a + 1.0);
  return scale *
         std::complex<double>(bessel_j_even(a, t), t * bessel_j_even(a + 1.0, t));
}

std::complex<double> e_alpha(AlphaParam alpha, std::complex<double> z) {
  if (z.real() == 0.0) return e_alpha_imaginary_axis(alpha, z.imag());
  const double a = alpha.value();
  const AlphaParam next(a + 1.0);
  if (z.imag() == 0.0) {
    const double x = z.real();
    return script_i(alpha, x) + x / (2.0 * (a + 1.0)) * script_i(next, x);
  }
  return script_i(alpha, z) + z / (2.0 * (a + 1.0)) * script_i(next, z);
}

ZeroTable::ZeroTable(AlphaParam alpha, std::vector<double> zeros)
    : alpha_(alpha), zeros_(std::move(zeros)) {
  for (std::size_t i = 0; i < zeros_.size(); ++i) {
    require(zeros_[i] > 0.0 && (i == 0 || zeros_[i] > zeros_[i - 1]),
            ErrorCode::kInvalidArgument,
            "zero table entries must be positive and strictly increasing");
  }
}

double ZeroTable::zero(int j) const {
  require(j >= 1 && j <= count(), ErrorCode::kInvalidArgument,
          "zero index " + std::to_string(j) + " outside table of " +
              std::to_string(count()));
  return zeros_[j - 1];
}

double ZeroTable::midpoint(int n) const {
  require(n >= 1 && n < count(), ErrorCode::kInvalidArgument,
          "midpoint M_" + std::to_string(n) + " needs zeros up to index " +
              std::to_string(n + 1));
  return 0.5 * (zeros_[n - 1] + zeros_[n]);
}

void ZeroTable::write_csv(std::ostream& out) const {
  out << "j,s_j\n";
  char buf[64];
  for (int j = 1; j <= count(); ++j) {
    std::snprintf(buf, sizeof buf, "%d,%.17g\n", j, zeros_[j - 1]);
    out << buf;
  }
}

ZeroTable build_zero_table(AlphaParam alpha, int n_max) {
  require(n_max >= 1, ErrorCode::kInvalidArgument, "n_max must be at least 1");
  const double nu = alpha.value() + 1.0;
  std::vector<double> zeros;
  zeros.reserve(n_max);

  double a = 0.0;
  double fa = bessel_j_even(nu, a);
  while (static_cast<int>(zeros.size()) < n_max) {
    const double b = a + kZeroScanStep;
    const double fb = bessel_j_even(nu, b);
    if (fb == 0.0) {
      zeros.push_back(b);
      a = b + 1e-9;
      fa = bessel_j_even(nu, a);
      continue;
    }
    if ((fa < 0.0) != (fb < 0.0)) {
      const int index = static_cast<int>(zeros.size()) + 1;
      double lo = a, hi = b, flo = fa;
      while (hi - lo > kBisectWidth) {
        const double mid = 0.5 * (lo + hi);
        const double fm = bessel_j_even(nu, mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      double z = 0.5 * (lo + hi);
      bool converged = false;
      for (int it = 0; it < 60; ++it) {
        const double f = bessel_j(nu, z);
        const double df = bessel_j(nu - 1.0, z) - nu / z * f;
        double next = z - f / df;
        if (!(next > lo && next < hi) || !std::isfinite(next)) {
          next = 0.5 * (lo + hi);
        }
        if ((bessel_j(nu, next) < 0.0) == (flo < 0.0)) {
          lo = std::max(lo, next);
        } else {
          hi = std::min(hi, next);
        }
        const double step = std::abs(next - z);
        z = next;
        if (step <= 1e-15 * z || hi - lo <= 4e-16 * z) {
          converged = true;
          break;
        }
      }
      if (!converged && std::abs(bessel_j(nu, z)) > 1e-12) {
        fail(ErrorCode::kConvergence,
             "zero s_" + std::to_string(index) + " of J_{alpha+1} did not converge");
      }
      zeros.push_back(z);
    }
    a = b;
    fa = fb;
  }
  return ZeroTable(alpha, std::move(zeros));
}

}  // namespace fdunkl
