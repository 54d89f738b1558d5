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

#include "fdunkl/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_map>

#include <Eigen/Dense>
#include <json.hpp>

#include "fdunkl/dunkl.hpp"
#include "fdunkl/error.hpp"
#include "fdunkl/measure.hpp"
#include "fdunkl/specfun.hpp"
#include "fdunkl/weights.hpp"

namespace fdunkl {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == value.size() && !value.empty(), ErrorCode::kInvalidArgument,
          key + ": expected a number, got '" + value + "'");
  return out;
}

long long parse_integer(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long out = 0;
  try {
    out = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == value.size() && !value.empty(), ErrorCode::kInvalidArgument,
          key + ": expected an integer, got '" + value + "'");
  return out;
}

int parse_int(const std::string& key, const std::string& value) {
  const long long v = parse_integer(key, value);
  require(v >= std::numeric_limits<int>::min() && v <= std::numeric_limits<int>::max(),
          ErrorCode::kInvalidArgument, key + ": value out of range");
  return static_cast<int>(v);
}

std::vector<int> sweep_degrees(const ExperimentConfig& cfg) {
  if (!cfg.sweep_n.empty()) return cfg.sweep_n;
  std::vector<int> out;
  for (int n = 8; n <= cfg.n_max; n *= 2) out.push_back(n);
  if (out.empty()) out.push_back(cfg.n_max);
  return out;
}

}  // namespace

void ExperimentConfig::validate() const {
  require(std::isfinite(alpha) && alpha > -1.0, ErrorCode::kInvalidArgument,
          "alpha must be > -1");
  require(std::isfinite(p) && p > 1.0, ErrorCode::kInvalidArgument, "p must be > 1");
  require(n_max >= 1, ErrorCode::kInvalidArgument, "nmax must be >= 1");
  require(quadrature_order >= 2, ErrorCode::kInvalidArgument, "order must be >= 2");
  require(quadrature_order <= kMaxQuadratureOrder, ErrorCode::kInvalidArgument,
          "order must be <= " + std::to_string(kMaxQuadratureOrder));
  require(ap_budget >= 1, ErrorCode::kInvalidArgument, "ap_budget must be >= 1");
  require(grid_step > 0.0 && grid_extent > 0.0 && grid_extent < 1.0,
          ErrorCode::kInvalidArgument, "grid needs step > 0 and 0 < extent < 1");
  for (int n : sweep_n) {
    require(n >= 1 && n <= n_max, ErrorCode::kInvalidArgument,
            "sweep_n entries must lie in [1, nmax]");
  }
}

void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "alpha") {
    cfg.alpha = parse_double(key, value);
  } else if (key == "p") {
    cfg.p = parse_double(key, value);
  } else if (key == "nmax") {
    cfg.n_max = parse_int(key, value);
  } else if (key == "order") {
    cfg.quadrature_order = parse_int(key, value);
  } else if (key == "weight") {
    cfg.weight = PowerWeight::parse(value);
  } else if (key == "v_weight") {
    cfg.v_weight = PowerWeight::parse(value);
  } else if (key == "seed") {
    const long long s = parse_integer(key, value);
    require(s >= 0, ErrorCode::kInvalidArgument, "seed must be non-negative");
    cfg.seed = static_cast<std::uint64_t>(s);
  } else if (key == "out") {
    require(!value.empty(), ErrorCode::kInvalidArgument, "out must not be empty");
    cfg.output_path = value;
  } else if (key == "function") {
    cfg.function = value;
  } else if (key == "ap_budget") {
    cfg.ap_budget = parse_int(key, value);
  } else if (key == "grid_step") {
    cfg.grid_step = parse_double(key, value);
  } else if (key == "grid_extent") {
    cfg.grid_extent = parse_double(key, value);
  } else if (key == "sweep_n") {
    cfg.sweep_n.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) cfg.sweep_n.push_back(parse_int(key, trim(item)));
  } else {
    fail(ErrorCode::kInvalidArgument, "unknown configuration key '" + key + "'");
  }
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    require(eq != std::string::npos, ErrorCode::kInvalidArgument,
            "config line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    require(!key.empty(), ErrorCode::kInvalidArgument,
            "config line " + std::to_string(lineno) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

void load_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::kIo, "cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  for (const auto& [key, value] : parse_config_text(ss.str())) apply_setting(cfg, key, value);
}

// ---------------------------------------------------------------------------
// Operator norm of f -> U S_n f from L^p(V^p dmu) to L^p(dmu).

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

double lp(const VectorXd& v, double r) {
  double s = 0.0;
  const double m = v.cwiseAbs().maxCoeff();
  if (m == 0.0) return 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::pow(std::abs(v[i]) / m, r);
  return m * std::pow(s, 1.0 / r);
}

// Unit vector in the dual norm attaining <dual(v), v> = |v|_r.
VectorXd dual(const VectorXd& v, double r) {
  const double norm = lp(v, r);
  VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double t = v[i] / norm;
    out[i] = std::copysign(std::pow(std::abs(t), r - 1.0), t);
  }
  return out;
}

struct PnormResult {
  double estimate;
  bool converged;
};

// Higham's p-norm power method for A = diag(a) G G^T diag(b).
PnormResult pnorm_power(const MatrixXd& G, const VectorXd& a, const VectorXd& b, double p,
                        VectorXd x) {
  const double q = p / (p - 1.0);
  const auto apply = [&](const VectorXd& v) -> VectorXd {
    return a.cwiseProduct(G * (G.transpose() * b.cwiseProduct(v)));
  };
  const auto apply_t = [&](const VectorXd& v) -> VectorXd {
    return b.cwiseProduct(G * (G.transpose() * a.cwiseProduct(v)));
  };
  x /= lp(x, p);
  double est = 0.0;
  for (int it = 0; it < 200; ++it) {
    const VectorXd y = apply(x);
    const double next = lp(y, p);
    if (next == 0.0) return {0.0, true};
    if (it > 0 && std::abs(next - est) <= 1e-6 * next) return {std::max(est, next), true};
    est = std::max(est, next);
    const VectorXd z = apply_t(dual(y, p));
    if (lp(z, q) <= z.dot(x) * (1.0 + 1e-12)) return {est, true};
    x = dual(z, q);
  }
  return {est, false};
}

}  // namespace

std::vector<NormGrowthRow> norm_growth(const ExperimentConfig& cfg) {
  cfg.validate();
  const AlphaParam alpha(cfg.alpha);
  const DunklSystem system(alpha, cfg.n_max);
  const QuadratureRule rule = build_rule(alpha, cfg.quadrature_order);
  const auto& nodes = rule.nodes();
  const auto& w = rule.weights();
  const Eigen::Index m = static_cast<Eigen::Index>(nodes.size());
  const double p = cfg.p;

  VectorXd a(m), b(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    a[i] = std::pow(w[i], 1.0 / p) * cfg.u()(nodes[i]);
    b[i] = std::pow(w[i], 1.0 - 1.0 / p) / cfg.v()(nodes[i]);
  }
  MatrixXd full(m, 2 * cfg.n_max + 1);
  full.col(0).setConstant(system.e0());
  for (int j = 1; j <= cfg.n_max; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) {
      const std::complex<double> e = system.eval_e(j, nodes[i]);
      full(i, 2 * j - 1) = std::sqrt(2.0) * e.real();
      full(i, 2 * j) = std::sqrt(2.0) * e.imag();
    }
  }

  Eigen::Index near0 = 0, near1 = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (std::abs(nodes[i]) < std::abs(nodes[near0])) near0 = i;
    if (nodes[i] > nodes[near1]) near1 = i;
  }

  std::vector<NormGrowthRow> rows;
  for (int n = 1; n <= cfg.n_max; ++n) {
    const MatrixXd G = full.leftCols(2 * n + 1);
    std::vector<VectorXd> starts;
    starts.push_back(VectorXd::Ones(m));
    starts.push_back(VectorXd::Unit(m, near0));
    starts.push_back(VectorXd::Unit(m, near1));
    std::mt19937_64 rng(cfg.seed * 1000003ULL + static_cast<std::uint64_t>(n));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    VectorXd r(m);
    for (Eigen::Index i = 0; i < m; ++i) r[i] = unit(rng);
    starts.push_back(r);

    PnormResult best{0.0, true};
    for (const VectorXd& s : starts) {
      const PnormResult res = pnorm_power(G, a, b, p, s);
      if (res.estimate > best.estimate) best = res;
    }
    rows.push_back({n, best.estimate, "matrix_pnorm", best.converged});
  }
  return rows;
}

double last_octave_slope(const std::vector<NormGrowthRow>& rows) {
  require(!rows.empty(), ErrorCode::kInvalidArgument, "no rows to fit");
  const int last = rows.back().n;
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : rows) {
    if (2 * r.n >= last && r.norm_estimate > 0.0) {
      pts.emplace_back(std::log(r.n), std::log(r.norm_estimate));
    }
  }
  require(pts.size() >= 2, ErrorCode::kInvalidArgument,
          "last octave needs at least two rows");
  double mx = 0.0, my = 0.0;
  for (auto [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0.0, sxx = 0.0;
  for (auto [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  return sxy / sxx;
}

// ---------------------------------------------------------------------------

namespace {

ComplexFunction catalog_function(const std::string& name, const DunklSystem& system) {
  if (name == "constant") return [](double) { return std::complex<double>(1.0); };
  if (name == "sign") {
    return [](double x) { return std::complex<double>(x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0)); };
  }
  if (name == "step") return [](double x) { return std::complex<double>(x >= 0 ? 1.0 : 0.0); };
  if (name == "bump") {
    return [](double x) {
      const double s = 1.0 - 4.0 * x * x;
      return std::complex<double>(s > 0 ? std::exp(1.0 - 1.0 / s) : 0.0);
    };
  }
  if (name.rfind("power:", 0) == 0) {
    const double beta = parse_double("function", name.substr(6));
    return [beta](double x) { return std::complex<double>(std::pow(std::abs(x), beta)); };
  }
  if (name.size() > 1 && name[0] == 'e') {
    const int j = parse_int("function", name.substr(1));
    require(std::abs(j) <= system.n_max(), ErrorCode::kInvalidArgument,
            "function " + name + " needs nmax >= " + std::to_string(std::abs(j)));
    return [&system, j](double x) { return system.eval_e(j, x); };
  }
  fail(ErrorCode::kInvalidArgument,
       "unknown function '" + name + "' (constant, sign, step, bump, power:<beta>, e<N>)");
}

}  // namespace

ConvergenceResult convergence(const ExperimentConfig& cfg) {
  cfg.validate();
  const AlphaParam alpha(cfg.alpha);
  const DunklSystem system(alpha, cfg.n_max);
  const QuadratureRule rule = build_rule(alpha, cfg.quadrature_order);
  const ComplexFunction f = catalog_function(cfg.function, system);

  ConvergenceResult out;
  const double data_norm = weighted_lp_norm(rule, f, LpNormSpec(cfg.p, cfg.v(), alpha));
  if (!std::isfinite(data_norm)) {
    out.warning = "function " + cfg.function +
                  " appears not to lie in L^p(V^p dmu); errors need not decrease";
  }

  const SeriesExpansion full = expand(system, rule, f, cfg.n_max);
  std::unordered_map<double, std::vector<std::complex<double>>> cache;
  const auto basis = [&](double x) -> const std::vector<std::complex<double>>& {
    auto it = cache.find(x);
    if (it == cache.end()) {
      std::vector<std::complex<double>> e(2 * cfg.n_max + 1);
      for (int j = -cfg.n_max; j <= cfg.n_max; ++j) e[j + cfg.n_max] = system.eval_e(j, x);
      it = cache.emplace(x, std::move(e)).first;
    }
    return it->second;
  };
  const LpNormSpec spec(cfg.p, cfg.u(), alpha);
  for (int n = 1; n <= cfg.n_max; ++n) {
    const ComplexFunction residual = [&](double x) {
      const auto& e = basis(x);
      std::complex<double> s = 0.0;
      for (int j = -n; j <= n; ++j) s += full.coefficient(j) * e[j + cfg.n_max];
      return s - f(x);
    };
    out.rows.push_back({n, weighted_lp_norm(rule, residual, spec)});
  }
  return out;
}

KernelSweepResult kernel_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<int> degrees = sweep_degrees(cfg);
  const AlphaParam alpha(cfg.alpha);
  const DunklSystem system(alpha, *std::max_element(degrees.begin(), degrees.end()));
  const int steps = static_cast<int>(std::floor(2.0 * cfg.grid_extent / cfg.grid_step + 1e-9));
  std::vector<double> grid;
  for (int i = 0; i <= steps; ++i) grid.push_back(-cfg.grid_extent + i * cfg.grid_step);

  KernelSweepResult out;
  for (int n : degrees) {
    double worst = 0.0;
    int skipped = 0;
    for (double x : grid) {
      for (double y : grid) {
        if (std::abs(x * y) < 1e-3 || std::abs(x - y) < 1e-3) {
          ++skipped;
          continue;
        }
        const RemainderBound rb = remainder_bound_check(system, n, x, y);
        const double ratio = rb.residual / rb.bound;
        out.rows.push_back({x, y, n, rb.residual, rb.bound, ratio});
        worst = std::max(worst, ratio);
      }
    }
    out.max_ratio.emplace_back(n, worst);
    out.skipped = skipped;
  }
  return out;
}

void cmd_zeros(const ExperimentConfig& cfg, std::ostream& out) {
  cfg.validate();
  build_zero_table(AlphaParam(cfg.alpha), cfg.n_max).write_csv(out);
}

void cmd_norm_growth(const ExperimentConfig& cfg, std::ostream& out) {
  const auto rows = norm_growth(cfg);
  out << "n,norm_estimate,method,converged\n";
  for (const auto& r : rows) {
    out << r.n << ',' << fmt(r.norm_estimate) << ',' << r.method << ','
        << (r.converged ? 1 : 0) << '\n';
  }
}

void cmd_convergence(const ExperimentConfig& cfg, std::ostream& out) {
  const ConvergenceResult res = convergence(cfg);
  out << "n,lp_error\n";
  if (res.warning) out << "# warning: " << *res.warning << '\n';
  for (const auto& r : res.rows) out << r.n << ',' << fmt(r.lp_error) << '\n';
}

void cmd_kernel_sweep(const ExperimentConfig& cfg, std::ostream& out) {
  const KernelSweepResult res = kernel_sweep(cfg);
  out << "x,y,n,residual,bound,ratio\n";
  for (const auto& r : res.rows) {
    out << fmt(r.x) << ',' << fmt(r.y) << ',' << r.n << ',' << fmt(r.residual) << ','
        << fmt(r.bound) << ',' << fmt(r.ratio) << '\n';
  }
  for (const auto& [n, c] : res.max_ratio) {
    out << "# n=" << n << " max_ratio=" << fmt(c) << '\n';
  }
  out << "# skipped_points_per_n=" << res.skipped << '\n';
}

namespace {

nlohmann::ordered_json weight_json(const PowerWeight& w) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& f : w.factors()) arr.push_back({f.t, f.gamma});
  return arr;
}

// b, A, B when w = |x|^b (1-x)^A (1+x)^B.
std::optional<std::array<double, 3>> corollary_exponents(const PowerWeight& w) {
  for (const auto& f : w.factors()) {
    if (f.t != -1.0 && f.t != 0.0 && f.t != 1.0) return std::nullopt;
  }
  return std::array<double, 3>{w.exponent_at(0.0), w.exponent_at(1.0), w.exponent_at(-1.0)};
}

}  // namespace

void cmd_ap_check(const ExperimentConfig& cfg, std::ostream& out) {
  cfg.validate();
  const AlphaParam alpha(cfg.alpha);
  nlohmann::ordered_json j;
  j["alpha"] = cfg.alpha;
  j["p"] = cfg.p;
  j["U"] = weight_json(cfg.u());
  j["V"] = weight_json(cfg.v());

  const auto ex = corollary_exponents(cfg.u());
  if (ex && cfg.u() == cfg.v()) {
    j["corollary"] = corollary_predicate(alpha, cfg.p, (*ex)[0], (*ex)[1], (*ex)[2]);
  } else {
    j["corollary"] = nullptr;
  }

  const TheoremConditions tc = theorem_conditions(alpha, cfg.p, cfg.u(), cfg.v());
  j["thm1"] = tc.thm1_applicable ? nlohmann::ordered_json(tc.thm1) : nullptr;
  j["thm2"] = tc.thm2_applicable ? nlohmann::ordered_json(tc.thm2) : nullptr;
  j["thm3_necessary"] = tc.thm3_necessary;

  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const auto& [u, v] : tc.pairs) {
    nlohmann::ordered_json pj;
    pj["u"] = weight_json(u);
    pj["v"] = weight_json(v);
    const bool analytic = ap_power_pair(u, v, cfg.p, 1.0);
    pj["analytic"] = analytic;
    const ApReport rep = ap_numeric(u, v, cfg.p, 1.0, cfg.ap_budget);
    pj["numeric"] = nlohmann::ordered_json::parse(rep.to_json());
    if (rep.verdict == ApVerdict::kInconclusive) {
      pj["agree"] = nullptr;
    } else {
      pj["agree"] = analytic == (rep.verdict == ApVerdict::kSatisfied);
    }
    pairs.push_back(std::move(pj));
  }
  j["pairs"] = std::move(pairs);
  out << j.dump(2) << '\n';
}

void run_command(const std::string& name, const ExperimentConfig& cfg, std::ostream& out) {
  if (name == "zeros") return cmd_zeros(cfg, out);
  if (name == "norm-growth") return cmd_norm_growth(cfg, out);
  if (name == "convergence") return cmd_convergence(cfg, out);
  if (name == "kernel-sweep") return cmd_kernel_sweep(cfg, out);
  if (name == "ap-check") return cmd_ap_check(cfg, out);
  fail(ErrorCode::kInvalidArgument, "unknown command '" + name + "'");
}

}  // namespace fdunkl
