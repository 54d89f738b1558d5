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

/* Exercises the C interface from plain C. */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "fdunkl/fdunkl.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static double one(double x, void* user) {
  (void)x;
  (void)user;
  return 1.0;
}

static double scaled(double x, void* user) { return *(const double*)user * x * x; }

int main(void) {
  const double pi = 3.14159265358979323846;
  double v = 0.0, re = 0.0, im = 0.0;

  EXPECT(strlen(fdk_version()) > 0);
  EXPECT(fdk_gamma(5.0, &v) == FDK_OK && fabs(v - 24.0) < 1e-12);
  EXPECT(fdk_gamma(0.0, &v) == FDK_DOMAIN);
  EXPECT(strlen(fdk_last_error()) > 0);
  EXPECT(fdk_bessel_j(0.5, pi, &v) == FDK_OK && fabs(v) < 1e-12);
  EXPECT(fdk_bessel_j(0.5, -1.0, &v) == FDK_DOMAIN);
  EXPECT(fdk_e_alpha_imag(-0.5, 0.7, &re, &im) == FDK_OK);
  EXPECT(fabs(re - cos(0.7)) < 1e-13 && fabs(im - sin(0.7)) < 1e-13);
  EXPECT(fdk_gamma(1.0, NULL) == FDK_INVALID_ARGUMENT);

  double zeros[3];
  EXPECT(fdk_bessel_zeros(-0.5, 3, zeros) == FDK_OK);
  for (int j = 0; j < 3; ++j) EXPECT(fabs(zeros[j] - (j + 1) * pi) < 1e-12);

  fdk_rule* rule = NULL;
  EXPECT(fdk_rule_create(0.0, 1, &rule) == FDK_INVALID_ARGUMENT && rule == NULL);
  EXPECT(fdk_rule_create(0.0, 500, &rule) == FDK_RANGE);
  EXPECT(fdk_rule_create(0.0, 64, &rule) == FDK_OK && rule != NULL);
  const double *nodes = NULL, *weights = NULL;
  size_t size = 0;
  EXPECT(fdk_rule_data(rule, &nodes, &weights, &size) == FDK_OK && size == 128);
  EXPECT(fdk_integrate(rule, one, NULL, &v) == FDK_OK && fabs(v - 0.5) < 1e-13);
  double factor = 4.0;
  EXPECT(fdk_integrate(rule, scaled, &factor, &v) == FDK_OK && fabs(v - 1.0) < 1e-13);
  EXPECT(fdk_integrate(rule, NULL, NULL, &v) == FDK_INVALID_ARGUMENT);

  fdk_system* sys = NULL;
  EXPECT(fdk_system_create(-2.0, 4, &sys) == FDK_INVALID_ARGUMENT);
  EXPECT(fdk_system_create(0.0, 4, &sys) == FDK_OK && sys != NULL);
  EXPECT(fdk_system_frequency(sys, -1, &v) == FDK_OK && fabs(v + 3.8317059702075) < 1e-9);
  EXPECT(fdk_system_eval(sys, 0, 0.3, &re, &im) == FDK_OK && fabs(re - sqrt(2.0)) < 1e-14);
  EXPECT(fdk_system_eval(sys, 5, 0.3, &re, &im) == FDK_INVALID_ARGUMENT);
  EXPECT(fdk_system_eval(sys, 1, 1.5, &re, &im) == FDK_DOMAIN);

  double cre[9], cim[9];
  EXPECT(fdk_expand(sys, rule, one, NULL, 4, cre, cim) == FDK_OK);
  EXPECT(fabs(cre[4] - 1.0 / sqrt(2.0)) < 1e-12 && fabs(cim[4]) < 1e-14);

  double k1 = 0.0, k2 = 0.0, res = 0.0, bound = 0.0;
  EXPECT(fdk_kernel_direct(sys, 3, 0.3, -0.6, &k1) == FDK_OK);
  EXPECT(fdk_kernel_closed(sys, 3, 0.3, -0.6, &k2) == FDK_OK);
  EXPECT(fabs(k1 - k2) < 1e-10 * fmax(1.0, fabs(k1)));
  EXPECT(fdk_kernel_closed(sys, 3, 0.0, -0.6, &k2) == FDK_DOMAIN);
  EXPECT(fdk_remainder_bound(sys, 3, 0.3, -0.6, &res, &bound) == FDK_OK && bound > 1.0);

  int flag = -1;
  EXPECT(fdk_corollary_predicate(0.0, 2.0, 0, 0, 0, &flag) == FDK_OK && flag == 1);
  EXPECT(fdk_corollary_predicate(0.0, 6.0, 0, 0, 0, &flag) == FDK_OK && flag == 0);
  EXPECT(fdk_hilbert(one, NULL, 0.5, &v) == FDK_OK && fabs(v - log(3.0)) < 1e-9);
  EXPECT(fdk_calderon(one, NULL, 0.5, &v) == FDK_OK && fabs(v - 1.0 - log(4.0)) < 1e-10);
  EXPECT(fdk_operator_j(one, NULL, 0.0, &v) == FDK_OK && fabs(v - log(3.0)) < 1e-10);

  fdk_config* cfg = NULL;
  EXPECT(fdk_config_create(&cfg) == FDK_OK);
  EXPECT(fdk_config_set(cfg, "nmax", "0") == FDK_OK);
  EXPECT(fdk_run(cfg, "zeros") == FDK_INVALID_ARGUMENT);
  EXPECT(fdk_config_set(cfg, "alpha", "abc") == FDK_INVALID_ARGUMENT);
  EXPECT(fdk_config_set(cfg, "nonsense", "1") == FDK_INVALID_ARGUMENT);
  EXPECT(fdk_config_load(cfg, "/nonexistent/file.cfg") == FDK_IO);
  EXPECT(fdk_config_set(cfg, "nmax", "2") == FDK_OK);
  EXPECT(fdk_config_set(cfg, "out", "capi_zeros.csv") == FDK_OK);
  EXPECT(fdk_run(cfg, "zeros") == FDK_OK);
  EXPECT(fdk_run(cfg, "unknown") == FDK_INVALID_ARGUMENT);
  FILE* f = fopen("capi_zeros.csv", "r");
  EXPECT(f != NULL);
  if (f) {
    char line[128];
    EXPECT(fgets(line, sizeof line, f) && strcmp(line, "j,s_j\n") == 0);
    fclose(f);
  }
  remove("capi_zeros.csv");

  fdk_config_destroy(cfg);
  fdk_system_destroy(sys);
  fdk_rule_destroy(rule);
  fdk_rule_destroy(NULL);

  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
