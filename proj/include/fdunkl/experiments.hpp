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

// Experiment drivers shared by the C API and the command-line tool. Each
// cmd_* writes one CSV or JSON document to the given stream.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fdunkl/power_weight.hpp"

namespace fdunkl {

struct ExperimentConfig {
  double alpha = 0.0;
  double p = 2.0;
  int n_max = 16;
  // U; also V unless v_weight is set.
  PowerWeight weight;
  std::optional<PowerWeight> v_weight;
  int quadrature_order = 128;
  std::uint64_t seed = 1;
  std::string output_path = "-";
  // Test function for cmd_convergence: constant, sign, step, bump,
  // power:<beta> or e<N>.
  std::string function = "sign";
  int ap_budget = 16;
  // Kernel sweep grid: x, y in {-extent, -extent + step, ..., extent}. The
  // default step resolves the kernel oscillation up to n = 32.
  double grid_step = 0.025;
  double grid_extent = 0.9;
  // Kernel sweep degrees; empty means 8, 16, 32, ... up to n_max.
  std::vector<int> sweep_n;

  const PowerWeight& u() const noexcept { return weight; }
  const PowerWeight& v() const noexcept { return v_weight ? *v_weight : weight; }

  // Throws Error(kInvalidArgument) naming the offending field.
  void validate() const;
};

// Applies one `key = value` setting. Keys: alpha, p, nmax, order, weight,
// v_weight, seed, out, function, ap_budget, grid_step, grid_extent, sweep_n.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);

// Parses `key = value` lines; `#` starts a comment, blank lines are skipped.
std::map<std::string, std::string> parse_config_text(const std::string& text);
void load_config_file(ExperimentConfig& cfg, const std::string& path);

struct NormGrowthRow {
  int n;
  double norm_estimate;
  std::string method;
  bool converged;
};

std::vector<NormGrowthRow> norm_growth(const ExperimentConfig& cfg);

// Log-log slope of norm_estimate against n over the last octave
// [n_last / 2, n_last].
double last_octave_slope(const std::vector<NormGrowthRow>& rows);

struct ConvergenceRow {
  int n;
  double lp_error;
};

struct ConvergenceResult {
  std::vector<ConvergenceRow> rows;
  std::optional<std::string> warning;
};

ConvergenceResult convergence(const ExperimentConfig& cfg);

struct KernelSweepRow {
  double x;
  double y;
  int n;
  double residual;
  double bound;
  double ratio;
};

struct KernelSweepResult {
  std::vector<KernelSweepRow> rows;
  std::vector<std::pair<int, double>> max_ratio;  // per n
  int skipped = 0;                                // grid points per n
};

KernelSweepResult kernel_sweep(const ExperimentConfig& cfg);

void cmd_zeros(const ExperimentConfig& cfg, std::ostream& out);
void cmd_norm_growth(const ExperimentConfig& cfg, std::ostream& out);
void cmd_convergence(const ExperimentConfig& cfg, std::ostream& out);
void cmd_kernel_sweep(const ExperimentConfig& cfg, std::ostream& out);
void cmd_ap_check(const ExperimentConfig& cfg, std::ostream& out);

// Dispatches on "zeros", "norm-growth", "convergence", "kernel-sweep" or
// "ap-check".
void run_command(const std::string& name, const ExperimentConfig& cfg, std::ostream& out);

}  // namespace fdunkl
