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

#include "entrobound/entrobound.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <string>

#include "entrobound/entropy.hpp"
#include "entrobound/error.hpp"
#include "entrobound/experiments.hpp"
#include "entrobound/fvdg.hpp"
#include "entrobound/metrics.hpp"
#include "entrobound/sampling.hpp"
#include "entrobound/state_io.hpp"

struct eb_density {
  entrobound::DensityOperator value;
};

struct eb_table {
  entrobound::Table value;
};

namespace {

using entrobound::ErrorCode;

thread_local std::string last_error;

eb_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonHermitian: return EB_ERR_NON_HERMITIAN;
    case ErrorCode::kNoConvergence: return EB_ERR_NO_CONVERGENCE;
    case ErrorCode::kNegativeEigenvalue: return EB_ERR_NEGATIVE_EIGENVALUE;
    case ErrorCode::kNotInvertible: return EB_ERR_NOT_INVERTIBLE;
    case ErrorCode::kInvalidDelta: return EB_ERR_INVALID_DELTA;
    case ErrorCode::kTraceNotOne: return EB_ERR_TRACE_NOT_ONE;
    case ErrorCode::kDimensionMismatch: return EB_ERR_DIMENSION_MISMATCH;
    case ErrorCode::kOutOfRange: return EB_ERR_OUT_OF_RANGE;
    case ErrorCode::kNotOrthonormal: return EB_ERR_NOT_ORTHONORMAL;
    case ErrorCode::kRejectionBudgetExhausted: return EB_ERR_REJECTION_BUDGET;
    case ErrorCode::kParseError: return EB_ERR_PARSE;
    case ErrorCode::kValidationError: return EB_ERR_VALIDATION;
    case ErrorCode::kIoError: return EB_ERR_IO;
  }
  return EB_ERR_INTERNAL;
}

eb_status set_error(eb_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs body() and converts any exception into a status plus message.
template <class Body>
eb_status guard(Body body) {
  try {
    body();
    last_error.clear();
    return EB_OK;
  } catch (const entrobound::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(EB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(EB_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(EB_ERR_INTERNAL, "unknown exception");
  }
}

bool missing(const void* p, const char* name, eb_status* status) {
  if (p) return false;
  *status = set_error(EB_ERR_INVALID_ARGUMENT, (std::string(name) + " is null").c_str());
  return true;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
eb_status pair_measure(const eb_density* rho, const eb_density* sigma, double* out, F f) {
  eb_status st;
  if (missing(rho, "rho", &st) || missing(sigma, "sigma", &st) || missing(out, "out", &st))
    return st;
  return guard([&] { *out = f(rho->value, sigma->value); });
}

}  // namespace

extern "C" {

const char* eb_version(void) { return "1.0.0"; }

const char* eb_last_error(void) { return last_error.c_str(); }

const char* eb_status_name(eb_status status) {
  switch (status) {
    case EB_OK: return "OK";
    case EB_ERR_NON_HERMITIAN: return "NonHermitian";
    case EB_ERR_NO_CONVERGENCE: return "NoConvergence";
    case EB_ERR_NEGATIVE_EIGENVALUE: return "NegativeEigenvalue";
    case EB_ERR_NOT_INVERTIBLE: return "NotInvertible";
    case EB_ERR_INVALID_DELTA: return "InvalidDelta";
    case EB_ERR_TRACE_NOT_ONE: return "TraceNotOne";
    case EB_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case EB_ERR_OUT_OF_RANGE: return "OutOfRange";
    case EB_ERR_NOT_ORTHONORMAL: return "NotOrthonormal";
    case EB_ERR_REJECTION_BUDGET: return "RejectionBudgetExhausted";
    case EB_ERR_PARSE: return "ParseError";
    case EB_ERR_VALIDATION: return "ValidationError";
    case EB_ERR_IO: return "IoError";
    case EB_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case EB_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

eb_status eb_density_create(size_t dim, const double* re_im, eb_density** out) {
  eb_status st;
  if (missing(re_im, "re_im", &st) || missing(out, "out", &st)) return st;
  *out = nullptr;
  if (dim == 0) return set_error(EB_ERR_DIMENSION_MISMATCH, "dimension must be positive");
  return guard([&] {
    const auto d = static_cast<Eigen::Index>(dim);
    entrobound::CMatrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        const double* p = re_im + 2 * (i * d + j);
        m(i, j) = {p[0], p[1]};
      }
    *out = new eb_density{entrobound::make_density(m)};
  });
}

void eb_density_free(eb_density* rho) { delete rho; }

size_t eb_density_dim(const eb_density* rho) {
  return rho ? static_cast<size_t>(rho->value.dim()) : 0;
}

eb_status eb_trace_distance(const eb_density* rho, const eb_density* sigma, double* out) {
  return pair_measure(rho, sigma, out, entrobound::trace_distance);
}

eb_status eb_fidelity(const eb_density* rho, const eb_density* sigma, double* out) {
  return pair_measure(rho, sigma, out, entrobound::fidelity);
}

eb_status eb_angular_distance(const eb_density* rho, const eb_density* sigma, double* out) {
  return pair_measure(rho, sigma, out, entrobound::angular_distance);
}

eb_status eb_von_neumann_entropy(const eb_density* rho, double* out) {
  eb_status st;
  if (missing(rho, "rho", &st) || missing(out, "out", &st)) return st;
  return guard([&] { *out = entrobound::von_neumann_entropy(rho->value); });
}

eb_status eb_conditional_entropy(const eb_density* rho, int dim_a, int dim_b, double* out) {
  eb_status st;
  if (missing(rho, "rho", &st) || missing(out, "out", &st)) return st;
  return guard([&] { *out = entrobound::conditional_entropy(rho->value, dim_a, dim_b); });
}

double eb_lipschitz_x0(void) { return entrobound::lipschitz_constants().x0; }

eb_status eb_lipschitz_u(int d, double* out) {
  eb_status st;
  if (missing(out, "out", &st)) return st;
  return guard([&] { *out = entrobound::lipschitz_u(d); });
}

eb_status eb_qc_continuity_bound(double angle, int dim_a, double* out) {
  eb_status st;
  if (missing(out, "out", &st)) return st;
  return guard([&] { *out = entrobound::qc_continuity_bound(angle, dim_a); });
}

void eb_experiment_config_init(eb_experiment_config* cfg) {
  if (!cfg) return;
  const entrobound::ExperimentConfig d;
  *cfg = {EB_EXPERIMENT_FIG1, d.dim_a, d.dim_b,   d.n_samples,  nullptr, 0,
          d.grid_step,        d.seed,  d.threads, d.max_rejects};
}

eb_status eb_run_experiment(const eb_experiment_config* cfg, eb_table** out) {
  eb_status st;
  if (missing(cfg, "cfg", &st) || missing(out, "out", &st)) return st;
  *out = nullptr;
  if (cfg->kind < EB_EXPERIMENT_FIG1 || cfg->kind > EB_EXPERIMENT_COMPARE)
    return set_error(EB_ERR_INVALID_ARGUMENT, "unknown experiment kind");
  if (cfg->n_angles > 0 && !cfg->angles)
    return set_error(EB_ERR_INVALID_ARGUMENT, "angles is null but n_angles > 0");
  return guard([&] {
    entrobound::ExperimentConfig c;
    c.kind = static_cast<entrobound::ExperimentKind>(cfg->kind);
    c.dim_a = cfg->dim_a;
    c.dim_b = cfg->dim_b;
    c.n_samples = cfg->n_samples;
    if (cfg->n_angles > 0) c.angles.assign(cfg->angles, cfg->angles + cfg->n_angles);
    c.grid_step = cfg->grid_step;
    c.seed = cfg->seed;
    c.threads = cfg->threads;
    c.max_rejects = cfg->max_rejects;
    *out = new eb_table{entrobound::run_experiment(c)};
  });
}

size_t eb_table_rows(const eb_table* t) { return t ? t->value.rows.size() : 0; }

size_t eb_table_cols(const eb_table* t) { return t ? t->value.columns.size() : 0; }

const char* eb_table_column_name(const eb_table* t, size_t col) {
  if (!t || col >= t->value.columns.size()) return nullptr;
  return t->value.columns[col].c_str();
}

double eb_table_value(const eb_table* t, size_t row, size_t col) {
  if (!t || row >= t->value.rows.size() || col >= t->value.columns.size())
    return std::numeric_limits<double>::quiet_NaN();
  return t->value.rows[row][col];
}

eb_status eb_table_scale_column(eb_table* t, size_t col, double factor) {
  eb_status st;
  if (missing(t, "table", &st)) return st;
  if (col >= t->value.columns.size())
    return set_error(EB_ERR_OUT_OF_RANGE, "column index out of range");
  for (auto& row : t->value.rows) row[col] *= factor;
  last_error.clear();
  return EB_OK;
}

eb_status eb_table_render(const eb_table* t, int format, char** out) {
  eb_status st;
  if (missing(t, "table", &st) || missing(out, "out", &st)) return st;
  *out = nullptr;
  if (format < EB_FORMAT_CSV || format > EB_FORMAT_SVG)
    return set_error(EB_ERR_INVALID_ARGUMENT, "unknown format");
  return guard([&] {
    *out = copy_string(entrobound::render(t->value, static_cast<entrobound::TableFormat>(format)));
  });
}

void eb_table_free(eb_table* t) { delete t; }

eb_status eb_classify_json(const char* pair_json, char** report_json) {
  eb_status st;
  if (missing(pair_json, "pair_json", &st) || missing(report_json, "report_json", &st)) return st;
  *report_json = nullptr;
  return guard([&] {
    const auto pair = entrobound::parse_state_pair(pair_json);
    const auto report = entrobound::classify_pair(pair.rho.density, pair.sigma.density);
    *report_json = copy_string(entrobound::report_to_json(report));
  });
}

eb_status eb_sample_qc_pair_json(uint64_t seed, int dim_a, int dim_b, char** out) {
  eb_status st;
  if (missing(out, "out", &st)) return st;
  *out = nullptr;
  return guard([&] {
    entrobound::Rng rng(seed);
    const auto [rho, sigma] = entrobound::sample_qc_pair(rng, dim_a, dim_b);
    *out = copy_string(entrobound::state_pair_to_json(rho, sigma));
  });
}

void eb_string_free(char* s) { std::free(s); }

}  // extern "C"
