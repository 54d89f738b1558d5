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

#ifndef FDUNKL_FDUNKL_H_
#define FDUNKL_FDUNKL_H_

/* C interface to the fdunkl library. Every function returns an fdk_status;
 * on failure fdk_last_error() describes the problem for the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FDK_API __declspec(dllexport)
#else
#define FDK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fdk_status {
  FDK_OK = 0,
  FDK_INVALID_ARGUMENT = 1,
  FDK_DOMAIN = 2,
  FDK_RANGE = 3,
  FDK_CONVERGENCE = 4,
  FDK_IO = 5,
  FDK_INTERNAL = 6
} fdk_status;

typedef struct fdk_system fdk_system;
typedef struct fdk_rule fdk_rule;
typedef struct fdk_config fdk_config;

typedef double (*fdk_real_fn)(double x, void* user);

FDK_API const char* fdk_version(void);
FDK_API const char* fdk_last_error(void);

/* Special functions. */
FDK_API fdk_status fdk_gamma(double x, double* out);
FDK_API fdk_status fdk_bessel_j(double nu, double x, double* out);
FDK_API fdk_status fdk_e_alpha_imag(double alpha, double t, double* re, double* im);
/* Writes the first n positive zeros of J_{alpha+1} to zeros[0..n-1]. */
FDK_API fdk_status fdk_bessel_zeros(double alpha, int n, double* zeros);

/* Quadrature for d mu_alpha. */
FDK_API fdk_status fdk_rule_create(double alpha, int order, fdk_rule** out);
FDK_API void fdk_rule_destroy(fdk_rule* rule);
FDK_API fdk_status fdk_rule_data(const fdk_rule* rule, const double** nodes,
                                 const double** weights, size_t* size);
FDK_API fdk_status fdk_integrate(const fdk_rule* rule, fdk_real_fn f, void* user,
                                 double* out);

/* The orthonormal system e_j, |j| <= n_max. */
FDK_API fdk_status fdk_system_create(double alpha, int n_max, fdk_system** out);
FDK_API void fdk_system_destroy(fdk_system* system);
FDK_API fdk_status fdk_system_frequency(const fdk_system* system, int j, double* out);
FDK_API fdk_status fdk_system_eval(const fdk_system* system, int j, double x, double* re,
                                   double* im);
/* Coefficients c_{-n..n} of a real function; re and im hold 2n+1 entries. */
FDK_API fdk_status fdk_expand(const fdk_system* system, const fdk_rule* rule,
                              fdk_real_fn f, void* user, int n, double* re, double* im);
FDK_API fdk_status fdk_kernel_direct(const fdk_system* system, int n, double x, double y,
                                     double* out);
FDK_API fdk_status fdk_kernel_closed(const fdk_system* system, int n, double x, double y,
                                     double* out);
FDK_API fdk_status fdk_remainder_bound(const fdk_system* system, int n, double x, double y,
                                       double* residual, double* bound);

/* Weights and model operators. */
FDK_API fdk_status fdk_corollary_predicate(double alpha, double p, double b, double A,
                                           double B, int* out);
FDK_API fdk_status fdk_hilbert(fdk_real_fn f, void* user, double x, double* out);
FDK_API fdk_status fdk_calderon(fdk_real_fn g, void* user, double x, double* out);
FDK_API fdk_status fdk_operator_j(fdk_real_fn f, void* user, double x, double* out);

/* Experiments. Keys follow the configuration file format: alpha, p, nmax,
 * order, weight, v_weight, seed, out, function, ap_budget, grid_step,
 * grid_extent, sweep_n. */
FDK_API fdk_status fdk_config_create(fdk_config** out);
FDK_API void fdk_config_destroy(fdk_config* config);
FDK_API fdk_status fdk_config_set(fdk_config* config, const char* key, const char* value);
FDK_API fdk_status fdk_config_load(fdk_config* config, const char* path);
/* Runs zeros, norm-growth, convergence, kernel-sweep or ap-check and writes
 * the result to the configured output ("-" is standard output). */
FDK_API fdk_status fdk_run(const fdk_config* config, const char* command);

#ifdef __cplusplus
}
#endif

#endif /* FDUNKL_FDUNKL_H_ */
