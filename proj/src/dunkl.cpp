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

#include "fdunkl/dunkl.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "fdunkl/error.hpp"
#include "fdunkl/weights.hpp"

namespace fdunkl {

DunklSystem::DunklSystem(AlphaParam alpha, int n_max)
    : alpha_(alpha),
      n_max_(n_max),
      zeros_(build_zero_table(alpha, std::max(n_max, 0) + 1)) {
  require(n_max >= 0, ErrorCode::kInvalidArgument, "n_max must be non-negative");
  const double a = alpha.value();
  e0_ = std::pow(2.0, 0.5 * (a + 1.0)) * std::sqrt(gamma_fn(a + 2.0));
  scale_ = std::pow(2.0, a) * gamma_fn(a + 1.0);
  const double numer = std::pow(2.0, 0.5 * a) * std::sqrt(gamma_fn(a + 1.0));
  norm_constants_.resize(n_max + 1, e0_);
  for (int j = 1; j <= n_max; ++j) {
    // I_alpha(i s) = 2^alpha Gamma(alpha+1) J_alpha(s) / s^alpha
    const double i_at_zero = scale_ * bessel_j_even(a, zeros_.zero(j));
    norm_constants_[j] = numer / std::abs(i_at_zero);
  }
}

void DunklSystem::check_index(int j) const {
  require(std::abs(j) <= n_max_, ErrorCode::kInvalidArgument,
          "index j = " + std::to_string(j) + " beyond system size " +
              std::to_string(n_max_));
}

double DunklSystem::frequency(int j) const {
  check_index(j);
  if (j == 0) return 0.0;
  return j > 0 ? zeros_.zero(j) : -zeros_.zero(-j);
}

double DunklSystem::norm_constant(int j) const {
  check_index(j);
  return norm_constants_[std::abs(j)];
}

std::complex<double> DunklSystem::eval_e(int j, double x) const {
  check_index(j);
  require(x > -1.0 && x < 1.0, ErrorCode::kDomain, "e_j is evaluated on (-1, 1) only");
  if (j == 0) return e0_;
  return norm_constants_[std::abs(j)] * e_alpha_imaginary_axis(alpha_, frequency(j) * x);
}

SeriesExpansion::SeriesExpansion(AlphaParam alpha, int degree,
                                 std::vector<std::complex<double>> coeffs)
    : alpha_(alpha), degree_(degree), coeffs_(std::move(coeffs)) {
  require(degree >= 0 && coeffs_.size() == static_cast<std::size_t>(2 * degree + 1),
          ErrorCode::kInvalidArgument, "expansion needs 2n+1 coefficients");
}

std::complex<double> SeriesExpansion::coefficient(int j) const {
  require(std::abs(j) <= degree_, ErrorCode::kInvalidArgument,
          "coefficient index beyond expansion degree");
  return coeffs_[j + degree_];
}

void SeriesExpansion::write_csv(std::ostream& out) const {
  out << "j,re_cj,im_cj\n";
  char buf[96];
  for (int j = -degree_; j <= degree_; ++j) {
    const auto c = coeffs_[j + degree_];
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", j, c.real(), c.imag());
    out << buf;
  }
}

SeriesExpansion expand(const DunklSystem& system, const QuadratureRule& rule,
                       const ComplexFunction& f, int n) {
  require(n >= 0 && n <= system.n_max(), ErrorCode::kInvalidArgument,
          "expansion degree beyond system size");
  require(rule.alpha() == system.alpha(), ErrorCode::kInvalidArgument,
          "rule and system use different alpha");
  std::vector<std::complex<double>> values(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    values[i] = f(rule.nodes()[i]);
    require(std::isfinite(values[i].real()) && std::isfinite(values[i].imag()),
            ErrorCode::kDomain,
            "function is not finite at node " + std::to_string(i));
  }
  std::vector<std::complex<double>> coeffs(2 * n + 1);
  for (int j = -n; j <= n; ++j) {
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      sum += rule.weights()[i] * values[i] * std::conj(system.eval_e(j, rule.nodes()[i]));
    }
    coeffs[j + n] = sum;
  }
  return SeriesExpansion(system.alpha(), n, std::move(coeffs));
}

SeriesExpansion expand(const DunklSystem& system, const QuadratureRule& rule,
                       const RealFunction& f, int n) {
  return expand(system, rule,
                ComplexFunction([&f](double x) { return std::complex<double>(f(x)); }),
                n);
}

std::complex<double> partial_sum(const SeriesExpansion& expansion,
                                 const DunklSystem& system, double x) {
  require(expansion.degree() <= system.n_max(), ErrorCode::kInvalidArgument,
          "expansion degree beyond system size");
  std::complex<double> sum = 0.0;
  for (int j = -expansion.degree(); j <= expansion.degree(); ++j) {
    sum += expansion.coefficient(j) * system.eval_e(j, x);
  }
  return sum;
}

double kernel_direct(const DunklSystem& system, int n, double x, double y) {
  require(n >= 0 && n <= system.n_max(), ErrorCode::kInvalidArgument,
          "kernel degree beyond system size");
  std::complex<double> sum = 0.0;
  for (int j = -n; j <= n; ++j) sum += system.eval_e(j, x) * std::conj(system.eval_e(j, y));
  require(std::abs(sum.imag()) <= 1e-9 * (1.0 + std::abs(sum.real())),
          ErrorCode::kInternal, "kernel K_n(x, y) has a non-negligible imaginary part");
  return sum.real();
}

double kernel_closed_sum_form(const DunklSystem& system, int n, double x, double y) {
  require(n >= 0 && n <= system.n_max(), ErrorCode::kInvalidArgument,
          "kernel degree beyond system size");
  require(x != 0.0 && y != 0.0, ErrorCode::kDomain,
          "closed kernel form needs x, y != 0; use kernel_direct on the axes");
  const double a = system.alpha().value();
  const double ax = std::abs(x), ay = std::abs(y);
  const double sgn = (x > 0) == (y > 0) ? 1.0 : -1.0;
  double sum = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double s = system.zeros().zero(j);
    const double ja = bessel_j(a, s);
    const double term = bessel_j(a, s * ax) * bessel_j(a, s * ay) +
                        sgn * bessel_j(a + 1.0, s * ax) * bessel_j(a + 1.0, s * ay);
    sum += term / (ja * ja);
  }
  return std::pow(2.0, a + 1.0) * gamma_fn(a + 2.0) +
         std::pow(2.0, a + 1.0) * gamma_fn(a + 1.0) * std::pow(ax * ay, -a) * sum;
}

double b_function(const DunklSystem& system, double M, double x, double y) {
  require(M > 0.0, ErrorCode::kInvalidArgument, "B(M, x, y) needs M > 0");
  require(x != y, ErrorCode::kDomain, "B(M, x, y) has a pole at x = y");
  require(x != 0.0 && y != 0.0, ErrorCode::kDomain, "B(M, x, y) needs x, y != 0");
  const double a = system.alpha().value();
  const double ax = std::abs(x), ay = std::abs(y);
  return std::pow(2.0, a) * gamma_fn(a + 1.0) * M * x * bessel_j(a + 1.0, M * ax) *
         bessel_j(a, M * ay) / (std::pow(ax, a + 1.0) * std::pow(ay, a) * (x - y));
}

RemainderBound remainder_bound_check(const DunklSystem& system, int n, double x,
                                     double y) {
  require(n >= 1, ErrorCode::kInvalidArgument, "remainder bound needs n >= 1");
  const double M = system.zeros().midpoint(n);
  const double a = system.alpha().value();
  const double k = kernel_direct(system, n, x, y);
  const double b = b_function(system, M, x, y) + b_function(system, M, y, x);
  // K_n and B are unchanged by (x, y) -> (-x, -y), so the bound is taken in
  // |x| and |y|; for x, y > 0 this is |xy|^{-(a+1/2)} / (2 - x - y) + 1.
  const double bound =
      std::pow(std::abs(x * y), -(a + 0.5)) / (2.0 - std::abs(x) - std::abs(y)) + 1.0;
  return {std::abs(k - b), bound};
}

TSplit t_split(const DunklSystem& system, const QuadratureRule& rule,
               const RealFunction& f, int n, double x,
               std::span<const double> breakpoints) {
  require(n >= 1, ErrorCode::kInvalidArgument, "T-splitting needs n >= 1");
  require(x != 0.0 && x > -1.0 && x < 1.0, ErrorCode::kDomain,
          "T-splitting needs x in (-1, 1) \\ {0}");
  const double a = system.alpha().value();
  const double M = system.zeros().midpoint(n);
  const double c = std::pow(2.0, a) * gamma_fn(a + 1.0);
  const double rho_norm = 1.0 / (std::pow(2.0, a + 1.0) * gamma_fn(a + 1.0));
  const auto rho = [&](double y) { return rho_norm * std::pow(std::abs(y), 2.0 * a + 1.0); };

  std::vector<double> cuts(breakpoints.begin(), breakpoints.end());
  cuts.push_back(0.0);

  // B(M,x,y) = c M x J_{a+1}(M|x|)|x|^{-a-1} * J_a(M|y|)|y|^{-a} / (x - y)
  const double front1 = c * M * x * std::pow(M, a + 1.0) * bessel_j_even(a + 1.0, M * x);
  const RealFunction h1 = [&](double y) {
    return f(y) * std::pow(M, a) * bessel_j_even(a, M * y) * rho(y);
  };
  // B(M,y,x) = c M y J_{a+1}(M|y|)|y|^{-a-1} * J_a(M|x|)|x|^{-a} / (y - x)
  const double front2 = c * M * std::pow(M, a) * bessel_j_even(a, M * x);
  const RealFunction h2 = [&](double y) {
    return f(y) * y * std::pow(M, a + 1.0) * bessel_j_even(a + 1.0, M * y) * rho(y);
  };

  TSplit out{};
  out.t1 = front1 * hilbert(h1, x, cuts);
  out.t2 = -front2 * hilbert(h2, x, cuts);
  const SeriesExpansion ex = expand(system, rule, f, n);
  out.partial_sum = partial_sum(ex, system, x).real();
  out.t3 = out.partial_sum - out.t1 - out.t2;
  return out;
}

void write_kernel_grid_csv(std::ostream& out, const DunklSystem& system, int n,
                           std::span<const double> xs, std::span<const double> ys) {
  require(n >= 1, ErrorCode::kInvalidArgument, "kernel grid needs n >= 1");
  const double M = system.zeros().midpoint(n);
  out << "x,y,K_direct,B_sum,residual,bound\n";
  char buf[192];
  for (double x : xs) {
    for (double y : ys) {
      if (x == y || x == 0.0 || y == 0.0) continue;
      const double k = kernel_direct(system, n, x, y);
      const double b = b_function(system, M, x, y) + b_function(system, M, y, x);
      const RemainderBound r = remainder_bound_check(system, n, x, y);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", x, y, k, b,
                    r.residual, r.bound);
      out << buf;
    }
  }
}

}  // namespace fdunkl
