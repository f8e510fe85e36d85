// Copyright 2026 The Entrobound Authors
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

/* C interface to the entrobound library. Every call that can fail returns an
 * eb_status; on failure eb_last_error() holds a message for the calling
 * thread. Objects are opaque and owned by the caller once returned. */
#ifndef ENTROBOUND_ENTROBOUND_H_
#define ENTROBOUND_ENTROBOUND_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ENTROBOUND_BUILDING)
#define EB_API __declspec(dllexport)
#else
#define EB_API __declspec(dllimport)
#endif
#else
#define EB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eb_status {
  EB_OK = 0,
  EB_ERR_NON_HERMITIAN = 1,
  EB_ERR_NO_CONVERGENCE = 2,
  EB_ERR_NEGATIVE_EIGENVALUE = 3,
  EB_ERR_NOT_INVERTIBLE = 4,
  EB_ERR_INVALID_DELTA = 5,
  EB_ERR_TRACE_NOT_ONE = 6,
  EB_ERR_DIMENSION_MISMATCH = 7,
  EB_ERR_OUT_OF_RANGE = 8,
  EB_ERR_NOT_ORTHONORMAL = 9,
  EB_ERR_REJECTION_BUDGET = 10,
  EB_ERR_PARSE = 11,
  EB_ERR_VALIDATION = 12,
  EB_ERR_IO = 13,
  EB_ERR_INVALID_ARGUMENT = 14, /* null pointer or bad enum */
  EB_ERR_INTERNAL = 99
} eb_status;

typedef struct eb_density eb_density;
typedef struct eb_table eb_table;

typedef enum eb_experiment_kind {
  EB_EXPERIMENT_FIG1 = 0,
  EB_EXPERIMENT_FIG2 = 1,
  EB_EXPERIMENT_CURVE = 2,
  EB_EXPERIMENT_SCAN = 3,
  EB_EXPERIMENT_COMPARE = 4
} eb_experiment_kind;

typedef enum eb_format { EB_FORMAT_CSV = 0, EB_FORMAT_JSON = 1, EB_FORMAT_SVG = 2 } eb_format;

typedef struct eb_experiment_config {
  int kind; /* eb_experiment_kind */
  int dim_a;
  int dim_b;
  int n_samples;
  const double* angles; /* fig2; NULL or n_angles == 0 for the default set */
  size_t n_angles;
  double grid_step;
  uint64_t seed;
  int threads;
  int max_rejects;
} eb_experiment_config;

EB_API const char* eb_version(void);
EB_API const char* eb_last_error(void);
EB_API const char* eb_status_name(eb_status status);

/* Row-major dim x dim matrix with interleaved (re, im) pairs: 2 * dim * dim
 * doubles. */
EB_API eb_status eb_density_create(size_t dim, const double* re_im, eb_density** out);
EB_API void eb_density_free(eb_density* rho);
EB_API size_t eb_density_dim(const eb_density* rho);

EB_API eb_status eb_trace_distance(const eb_density* rho, const eb_density* sigma, double* out);
EB_API eb_status eb_fidelity(const eb_density* rho, const eb_density* sigma, double* out);
EB_API eb_status eb_angular_distance(const eb_density* rho, const eb_density* sigma, double* out);
EB_API eb_status eb_von_neumann_entropy(const eb_density* rho, double* out);
EB_API eb_status eb_conditional_entropy(const eb_density* rho, int dim_a, int dim_b, double* out);

EB_API double eb_lipschitz_x0(void);
EB_API eb_status eb_lipschitz_u(int d, double* out);
EB_API eb_status eb_qc_continuity_bound(double angle, int dim_a, double* out);

/* Fills the defaults: fig1, d_A = d_B = 2, 10^4 samples, grid step 0.005,
 * seed 0, one thread, rejection budget 1000. */
EB_API void eb_experiment_config_init(eb_experiment_config* cfg);
EB_API eb_status eb_run_experiment(const eb_experiment_config* cfg, eb_table** out);

EB_API size_t eb_table_rows(const eb_table* t);
EB_API size_t eb_table_cols(const eb_table* t);
EB_API const char* eb_table_column_name(const eb_table* t, size_t col);
/* NaN when out of range. */
EB_API double eb_table_value(const eb_table* t, size_t row, size_t col);
/* Multiplies one column in place; used for unit changes (nats to bits). */
EB_API eb_status eb_table_scale_column(eb_table* t, size_t col, double factor);
/* *out is a NUL-terminated string released with eb_string_free. */
EB_API eb_status eb_table_render(const eb_table* t, int format, char** out);
EB_API void eb_table_free(eb_table* t);

/* pair_json: {"rho": state, "sigma": state}; *report_json receives the
 * saturation report. */
EB_API eb_status eb_classify_json(const char* pair_json, char** report_json);
/* A random quantum-classical pair in the same document format. */
EB_API eb_status eb_sample_qc_pair_json(uint64_t seed, int dim_a, int dim_b, char** out);
EB_API void eb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ENTROBOUND_ENTROBOUND_H_ */
