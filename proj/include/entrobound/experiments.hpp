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

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "entrobound/states.hpp"
#include "entrobound/table.hpp"

namespace entrobound {

enum class ExperimentKind { kFig1, kFig2, kCurve, kScan, kCompare };

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kFig1;
  int dim_a = 2;
  int dim_b = 2;
  int n_samples = 10000;       // fig1: pairs; fig2: pairs per angle
  std::vector<double> angles;  // fig2; empty means 1e-6, 2e-6, ..., 1e-5
  double grid_step = 0.005;    // lambda grid (curve, scan) or T grid (compare)
  std::uint64_t seed = 0;
  int threads = 1;
  int max_rejects = 1000;
  int scan_max_dim_a = 10;  // scan covers d_A in 2..max, d_B in 1..max
  int scan_max_dim_b = 10;
};

// Throws kValidationError for out-of-range fields.
void validate(const ExperimentConfig& cfg);

Table fig1_scatter(const ExperimentConfig& cfg);
Table fig2_fixed_angle(const ExperimentConfig& cfg);
Table counterexample_curve(const ExperimentConfig& cfg);
Table counterexample_scan(const ExperimentConfig& cfg);
Table bounds_compare(const ExperimentConfig& cfg);
Table run_experiment(const ExperimentConfig& cfg);

// Maximally entangled rho on min(d_A, d_B) levels and
// sigma = lambda I / (d_A d_B) + (1 - lambda) rho, k-outer layout.
std::pair<DensityOperator, DensityOperator> counterexample_states(int dim_a, int dim_b,
                                                                  double lambda);

struct CounterexamplePoint {
  double angle;
  double abs_delta_h;
};

// Closed forms for the family above.
CounterexamplePoint counterexample_closed_form(int dim_a, int dim_b, double lambda);
// Direct evaluation on the density matrices.
CounterexamplePoint counterexample_matrix(int dim_a, int dim_b, double lambda);

// Evenly spaced points from 0 to 1 inclusive.
std::vector<double> unit_grid(double step);

}  // namespace entrobound
