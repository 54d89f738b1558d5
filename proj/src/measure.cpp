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

#include "fdunkl/measure.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fdunkl/error.hpp"

namespace fdunkl {

namespace {

// Monic three-term recurrence for the weight x^beta on (0, 1) (shifted
// Jacobi with parameters (0, beta)).
struct Recurrence {
  std::vector<double> a;  // diagonal
  std::vector<double> b;  // b[k] = beta_k, k >= 1; b[0] = total mass
};

Recurrence shifted_jacobi(double beta, int n) {
  Recurrence r;
  r.a.resize(n);
  r.b.resize(n + 1);
  r.b[0] = 1.0 / (beta + 1.0);
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + beta;
    const double ak = k == 0 ? beta / (beta + 2.0) : beta * beta / (s * (s + 2.0));
    r.a[k] = 0.5 * (1.0 + ak);
  }
  for (int k = 1; k <= n; ++k) {
    const double s = 2.0 * k + beta;
    const double bk = 4.0 * k * k * (k + beta) * (k + beta) /
                      (s * s * (s + 1.0) * (s - 1.0));
    r.b[k] = 0.25 * bk;
  }
  return r;
}

struct PolyEval {
  double value;
  double derivative;
  double christoffel;  // sum_{k<n} p_k(x)^2
};

PolyEval orthonormal_eval(const Recurrence& r, int n, double x) {
  double p_prev = 0.0, dp_prev = 0.0;
  double p = 1.0 / std::sqrt(r.b[0]), dp = 0.0;
  double sum = p * p;
  for (int k = 0; k < n; ++k) {
    const double sb_next = std::sqrt(r.b[k + 1]);
    const double sb = k == 0 ? 0.0 : std::sqrt(r.b[k]);
    const double p_next = ((x - r.a[k]) * p - sb * p_prev) / sb_next;
    const double dp_next = (p + (x - r.a[k]) * dp - sb * dp_prev) / sb_next;
    p_prev = p;
    dp_prev = dp;
    p = p_next;
    dp = dp_next;
    if (k + 1 < n) sum += p * p;
  }
  return {p, dp, sum};
}

}  // namespace

QuadratureRule::QuadratureRule(AlphaParam alpha, int order, std::vector<double> nodes,
                               std::vector<double> weights)
    : alpha_(alpha), order_(order), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  require(nodes_.size() == weights_.size(), ErrorCode::kInvalidArgument,
          "quadrature nodes and weights differ in length");
}

double total_mass(AlphaParam alpha) {
  const double a = alpha.value();
  return 1.0 / (std::pow(2.0, a + 1.0) * gamma_fn(a + 2.0));
}

QuadratureRule build_rule(AlphaParam alpha, int order) {
  require(order >= 2, ErrorCode::kInvalidArgument, "quadrature order must be >= 2");
  require(order <= kMaxQuadratureOrder, ErrorCode::kRange,
          "quadrature order " + std::to_string(order) +
              " exceeds the well-conditioned limit of " +
              std::to_string(kMaxQuadratureOrder));
  const double a = alpha.value();
  const double beta = 2.0 * a + 1.0;
  const int n = order;
  const Recurrence rec = shifted_jacobi(beta, n);

  Eigen::VectorXd diag(n), sub(n - 1);
  for (int k = 0; k < n; ++k) diag[k] = rec.a[k];
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(rec.b[k]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  require(solver.info() == Eigen::Success, ErrorCode::kConvergence,
          "Jacobi matrix eigenvalue solve failed");

  std::vector<double> half_nodes(n), half_weights(n);
  for (int i = 0; i < n; ++i) {
    double x = solver.eigenvalues()[i];
    for (int it = 0; it < 8; ++it) {
      const PolyEval e = orthonormal_eval(rec, n, x);
      const double step = e.value / e.derivative;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::abs(x)) break;
    }
    require(x > 0.0 && x < 1.0, ErrorCode::kConvergence,
            "quadrature node refinement left (0, 1)");
    half_nodes[i] = x;
    half_weights[i] = 1.0 / orthonormal_eval(rec, n, x).christoffel;
  }

  const double norm = 1.0 / (std::pow(2.0, a + 1.0) * gamma_fn(a + 1.0));
  std::vector<double> nodes(2 * n), weights(2 * n);
  for (int i = 0; i < n; ++i) {
    // Negative half in ascending order, then the positive half.
    nodes[n - 1 - i] = -half_nodes[i];
    weights[n - 1 - i] = norm * half_weights[i];
    nodes[n + i] = half_nodes[i];
    weights[n + i] = norm * half_weights[i];
  }
  return QuadratureRule(alpha, order, std::move(nodes), std::move(weights));
}

double integrate(const QuadratureRule& rule, const RealFunction& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes()[i];
    const double v = f(x);
    require(std::isfinite(v), ErrorCode::kDomain,
            "integrand is not finite at node " + std::to_string(i) + " (x = " +
                std::to_string(x) + ")");
    sum += rule.weights()[i] * v;
  }
  return sum;
}

std::complex<double> integrate(const QuadratureRule& rule, const ComplexFunction& f) {
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes()[i];
    const std::complex<double> v = f(x);
    require(std::isfinite(v.real()) && std::isfinite(v.imag()), ErrorCode::kDomain,
            "integrand is not finite at node " + std::to_string(i) + " (x = " +
                std::to_string(x) + ")");
    sum += rule.weights()[i] * v;
  }
  return sum;
}

LpNormSpec::LpNormSpec(double p, PowerWeight weight, AlphaParam alpha)
    : p_(p), weight_(std::move(weight)), alpha_(alpha) {
  require(std::isfinite(p) && p > 1.0, ErrorCode::kInvalidArgument,
          "L^p exponent must satisfy 1 < p < inf");
}

namespace {

double lp_on_rule(const QuadratureRule& rule, const ComplexFunction& f,
                  const LpNormSpec& spec) {
  const double p = spec.p();
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes()[i];
    const double v = std::abs(f(x)) * spec.weight()(x);
    require(!std::isnan(v), ErrorCode::kDomain,
            "norm integrand is NaN at node " + std::to_string(i));
    sum += rule.weights()[i] * std::pow(v, p);
  }
  return std::pow(sum, 1.0 / p);
}

bool weight_may_diverge(const PowerWeight& w) {
  for (const auto& f : w.factors()) {
    if (f.gamma < 0.0 && f.t >= -1.0 && f.t <= 1.0) return true;
  }
  return false;
}

}  // namespace

double weighted_lp_norm(const QuadratureRule& rule, const ComplexFunction& f,
                        const LpNormSpec& spec) {
  require(rule.alpha() == spec.alpha(), ErrorCode::kInvalidArgument,
          "norm spec and quadrature rule use different alpha");
  const double value = lp_on_rule(rule, f, spec);
  if (!weight_may_diverge(spec.weight()) || rule.order() < 8 || value == 0.0) {
    return value;
  }
  const double coarse = lp_on_rule(build_rule(rule.alpha(), rule.order() / 4), f, spec);
  const double mid = lp_on_rule(build_rule(rule.alpha(), rule.order() / 2), f, spec);
  if (mid >= 1.05 * coarse && value >= 1.05 * mid) {
    return std::numeric_limits<double>::infinity();
  }
  return value;
}

double weighted_lp_norm(const QuadratureRule& rule, const RealFunction& f,
                        const LpNormSpec& spec) {
  return weighted_lp_norm(
      rule, ComplexFunction([&f](double x) { return std::complex<double>(f(x)); }),
      spec);
}

}  // namespace fdunkl
