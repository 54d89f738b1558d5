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

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "fdunkl/fdunkl.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

int exit_code(fdk_status s) {
  if (s == FDK_OK) return 0;
  return s == FDK_INVALID_ARGUMENT ? kExitUsage : kExitNumerical;
}

struct ConfigHandle {
  fdk_config* ptr = nullptr;
  ~ConfigHandle() { fdk_config_destroy(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier-Dunkl expansion experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> config_path;
  app.add_option("--config", config_path, "key = value configuration file");

  // Flag name, configuration key, help.
  const std::vector<std::tuple<std::string, std::string, std::string>> flags = {
      {"--alpha", "alpha", "alpha > -1"},
      {"--p", "p", "exponent p > 1"},
      {"--nmax", "nmax", "largest degree n (>= 1)"},
      {"--order", "order", "quadrature nodes per half interval (2..200)"},
      {"--weight", "weight", "U (and V) as \"b,A,B[;t:gamma...]\""},
      {"--v-weight", "v_weight", "V when it differs from U"},
      {"--seed", "seed", "random seed"},
      {"--out", "out", "output path, - for standard output"},
      {"--function", "function", "convergence test function"},
      {"--budget", "ap_budget", "dyadic scales for the numeric A_p check"},
      {"--grid-step", "grid_step", "kernel sweep grid step"},
      {"--grid-extent", "grid_extent", "kernel sweep grid half width"},
      {"--sweep-n", "sweep_n", "kernel sweep degrees, comma separated"},
  };
  std::vector<std::optional<std::string>> values(flags.size());
  for (std::size_t i = 0; i < flags.size(); ++i) {
    app.add_option(std::get<0>(flags[i]), values[i], std::get<2>(flags[i]));
  }

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"zeros", "table of s_j, the positive zeros of J_{alpha+1}"},
      {"norm-growth", "operator norm estimates of U S_n V^{-1} against n"},
      {"convergence", "weighted L^p error of S_n f against n"},
      {"kernel-sweep", "remainder of the kernel approximation on a grid"},
      {"ap-check", "analytic and numeric weight conditions as JSON"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  ConfigHandle cfg;
  if (fdk_status s = fdk_config_create(&cfg.ptr); s != FDK_OK) {
    std::fprintf(stderr, "error: %s\n", fdk_last_error());
    return exit_code(s);
  }
  if (config_path) {
    if (fdk_status s = fdk_config_load(cfg.ptr, config_path->c_str()); s != FDK_OK) {
      std::fprintf(stderr, "error: %s\n", fdk_last_error());
      return exit_code(s);
    }
  }
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (!values[i]) continue;
    const fdk_status s =
        fdk_config_set(cfg.ptr, std::get<1>(flags[i]).c_str(), values[i]->c_str());
    if (s != FDK_OK) {
      std::fprintf(stderr, "error: %s: %s\n", std::get<0>(flags[i]).c_str(), fdk_last_error());
      return exit_code(s);
    }
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const fdk_status s = fdk_run(cfg.ptr, command.c_str());
  if (s != FDK_OK) {
    std::fprintf(stderr, "error: %s: %s\n", command.c_str(), fdk_last_error());
    return exit_code(s);
  }
  return 0;
}
