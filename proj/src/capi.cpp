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

#include "fdunkl/fdunkl.h"

#include <complex>
#include <exception>
#include <fstream>
#include <iostream>
#include <new>
#include <sstream>
#include <string>

#include "fdunkl/dunkl.hpp"
#include "fdunkl/error.hpp"
#include "fdunkl/experiments.hpp"
#include "fdunkl/measure.hpp"
#include "fdunkl/specfun.hpp"
#include "fdunkl/weights.hpp"

struct fdk_system {
  fdunkl::DunklSystem impl;
};

struct fdk_rule {
  fdunkl::QuadratureRule impl;
};

struct fdk_config {
  fdunkl::ExperimentConfig impl;
};

namespace {

thread_local std::string last_error;

fdk_status to_status(fdunkl::ErrorCode code) {
  switch (code) {
    case fdunkl::ErrorCode::kInvalidArgument: return FDK_INVALID_ARGUMENT;
    case fdunkl::ErrorCode::kDomain: return FDK_DOMAIN;
    case fdunkl::ErrorCode::kRange: return FDK_RANGE;
    case fdunkl::ErrorCode::kConvergence: return FDK_CONVERGENCE;
    case fdunkl::ErrorCode::kIo: return FDK_IO;
    case fdunkl::ErrorCode::kInternal: return FDK_INTERNAL;
  }
  return FDK_INTERNAL;
}

template <class F>
fdk_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return FDK_OK;
  } catch (const fdunkl::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FDK_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FDK_INTERNAL;
  }
}

void need(const void* ptr, const char* what) {
  fdunkl::require(ptr != nullptr, fdunkl::ErrorCode::kInvalidArgument,
                  std::string(what) + " must not be null");
}

fdunkl::RealFunction wrap(fdk_real_fn f, void* user) {
  need(reinterpret_cast<const void*>(f), "function pointer");
  return [f, user](double x) { return f(x, user); };
}

}  // namespace

extern "C" {

const char* fdk_version(void) { return "1.0.0"; }

const char* fdk_last_error(void) { return last_error.c_str(); }

fdk_status fdk_gamma(double x, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = fdunkl::gamma_fn(x);
  });
}

fdk_status fdk_bessel_j(double nu, double x, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = fdunkl::bessel_j(nu, x);
  });
}

fdk_status fdk_e_alpha_imag(double alpha, double t, double* re, double* im) {
  return guarded([&] {
    need(re, "re");
    need(im, "im");
    const std::complex<double> v =
        fdunkl::e_alpha_imaginary_axis(fdunkl::AlphaParam(alpha), t);
    *re = v.real();
    *im = v.imag();
  });
}

fdk_status fdk_bessel_zeros(double alpha, int n, double* zeros) {
  return guarded([&] {
    need(zeros, "zeros");
    const fdunkl::ZeroTable table = fdunkl::build_zero_table(fdunkl::AlphaParam(alpha), n);
    for (int j = 1; j <= n; ++j) zeros[j - 1] = table.zero(j);
  });
}

fdk_status fdk_rule_create(double alpha, int order, fdk_rule** out) {
  return guarded([&] {
    need(out, "out");
    *out = new fdk_rule{fdunkl::build_rule(fdunkl::AlphaParam(alpha), order)};
  });
}

void fdk_rule_destroy(fdk_rule* rule) { delete rule; }

fdk_status fdk_rule_data(const fdk_rule* rule, const double** nodes, const double** weights,
                         size_t* size) {
  return guarded([&] {
    need(rule, "rule");
    need(nodes, "nodes");
    need(weights, "weights");
    need(size, "size");
    *nodes = rule->impl.nodes().data();
    *weights = rule->impl.weights().data();
    *size = rule->impl.size();
  });
}

fdk_status fdk_integrate(const fdk_rule* rule, fdk_real_fn f, void* user, double* out) {
  return guarded([&] {
    need(rule, "rule");
    need(out, "out");
    *out = fdunkl::integrate(rule->impl, wrap(f, user));
  });
}

fdk_status fdk_system_create(double alpha, int n_max, fdk_system** out) {
  return guarded([&] {
    need(out, "out");
    *out = new fdk_system{fdunkl::DunklSystem(fdunkl::AlphaParam(alpha), n_max)};
  });
}

void fdk_system_destroy(fdk_system* system) { delete system; }

fdk_status fdk_system_frequency(const fdk_system* system, int j, double* out) {
  return guarded([&] {
    need(system, "system");
    need(out, "out");
    *out = system->impl.frequency(j);
  });
}

fdk_status fdk_system_eval(const fdk_system* system, int j, double x, double* re,
                           double* im) {
  return guarded([&] {
    need(system, "system");
    need(re, "re");
    need(im, "im");
    const std::complex<double> v = system->impl.eval_e(j, x);
    *re = v.real();
    *im = v.imag();
  });
}

fdk_status fdk_expand(const fdk_system* system, const fdk_rule* rule, fdk_real_fn f,
                      void* user, int n, double* re, double* im) {
  return guarded([&] {
    need(system, "system");
    need(rule, "rule");
    need(re, "re");
    need(im, "im");
    const fdunkl::SeriesExpansion ex = fdunkl::expand(system->impl, rule->impl, wrap(f, user), n);
    for (int j = -n; j <= n; ++j) {
      re[j + n] = ex.coefficient(j).real();
      im[j + n] = ex.coefficient(j).imag();
    }
  });
}

fdk_status fdk_kernel_direct(const fdk_system* system, int n, double x, double y,
                             double* out) {
  return guarded([&] {
    need(system, "system");
    need(out, "out");
    *out = fdunkl::kernel_direct(system->impl, n, x, y);
  });
}

fdk_status fdk_kernel_closed(const fdk_system* system, int n, double x, double y,
                             double* out) {
  return guarded([&] {
    need(system, "system");
    need(out, "out");
    *out = fdunkl::kernel_closed_sum_form(system->impl, n, x, y);
  });
}

fdk_status fdk_remainder_bound(const fdk_system* system, int n, double x, double y,
                               double* residual, double* bound) {
  return guarded([&] {
    need(system, "system");
    need(residual, "residual");
    need(bound, "bound");
    const fdunkl::RemainderBound rb = fdunkl::remainder_bound_check(system->impl, n, x, y);
    *residual = rb.residual;
    *bound = rb.bound;
  });
}

fdk_status fdk_corollary_predicate(double alpha, double p, double b, double A, double B,
                                   int* out) {
  return guarded([&] {
    need(out, "out");
    *out = fdunkl::corollary_predicate(fdunkl::AlphaParam(alpha), p, b, A, B) ? 1 : 0;
  });
}

fdk_status fdk_hilbert(fdk_real_fn f, void* user, double x, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = fdunkl::hilbert(wrap(f, user), x);
  });
}

fdk_status fdk_calderon(fdk_real_fn g, void* user, double x, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = fdunkl::calderon(wrap(g, user), x);
  });
}

fdk_status fdk_operator_j(fdk_real_fn f, void* user, double x, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = fdunkl::operator_j(wrap(f, user), x);
  });
}

fdk_status fdk_config_create(fdk_config** out) {
  return guarded([&] {
    need(out, "out");
    *out = new fdk_config{};
  });
}

void fdk_config_destroy(fdk_config* config) { delete config; }

fdk_status fdk_config_set(fdk_config* config, const char* key, const char* value) {
  return guarded([&] {
    need(config, "config");
    need(key, "key");
    need(value, "value");
    fdunkl::apply_setting(config->impl, key, value);
  });
}

fdk_status fdk_config_load(fdk_config* config, const char* path) {
  return guarded([&] {
    need(config, "config");
    need(path, "path");
    fdunkl::load_config_file(config->impl, path);
  });
}

fdk_status fdk_run(const fdk_config* config, const char* command) {
  return guarded([&] {
    need(config, "config");
    need(command, "command");
    // Render fully before touching the output so a failed run leaves no
    // partial file behind.
    std::ostringstream buf;
    fdunkl::run_command(command, config->impl, buf);
    const std::string& path = config->impl.output_path;
    if (path == "-") {
      std::cout << buf.str() << std::flush;
      return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    fdunkl::require(static_cast<bool>(file), fdunkl::ErrorCode::kIo,
                    "cannot open output file '" + path + "'");
    file << buf.str();
    file.flush();
    fdunkl::require(static_cast<bool>(file), fdunkl::ErrorCode::kIo,
                    "failed writing output file '" + path + "'");
  });
}

}  // extern "C"
