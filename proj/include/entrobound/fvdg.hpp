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

#include <optional>
#include <string_view>
#include <vector>

#include "entrobound/linalg.hpp"
#include "entrobound/metrics.hpp"
#include "entrobound/states.hpp"

namespace entrobound {

// Eigenbasis of rho - sigma; the computational basis when rho == sigma.
Rank1Measurement trace_optimal_measurements(const DensityOperator& rho,
                                            const DensityOperator& sigma);

// Every basis vector lies (numerically) in ker P or ker Q, where P, Q are the
// positive and negative parts of rho - sigma. Kernel tolerance is
// tol::kKernel * sqrt(||P||_inf), and likewise for Q.
bool is_trace_optimal(const Rank1Measurement& lambda, const DensityOperator& rho,
                      const DensityOperator& sigma);

// Eigenbasis of M = rho^{-1} # sigma. Both states must be invertible.
Rank1Measurement fidelity_optimal_measurement(const DensityOperator& rho,
                                              const DensityOperator& sigma);

// Every basis vector is an eigenvector of M:
// ||M e - (e^dagger M e) e|| <= tol::kEigenvectorResidual * max(1, ||M||_inf).
bool is_fidelity_optimal(const Rank1Measurement& lambda, const DensityOperator& rho,
                         const DensityOperator& sigma);

enum class ClassicalSaturation { kC1, kC2, kBoth, kNeither };
std::string_view classical_saturation_name(ClassicalSaturation c);

// C1: the lower inequality is tight (every x has p = q or a zero entry).
// C2: the upper one is (p = q, disjoint supports, or q(x) in {b p(x), p(x)/b}).
ClassicalSaturation classical_saturation_class(const ClassicalDist& p, const ClassicalDist& q);

enum class PairClass { kEqual, kLowerSaturated, kUpperSaturated, kNeitherSaturated };
std::string_view pair_class_name(PairClass c);

struct SaturationReport {
  PairClass pair_class;
  bool invertible;
  // Only for invertible pairs.
  std::optional<HermitianMatrix> m;
  RVector spectrum_m;
  std::optional<double> commutator_residual;  // ||[M, rho - sigma]|| normalized
  std::optional<double> riccati_residual;     // ||M rho M - sigma||_inf
  std::optional<double> c_value;              // spectrum of M is {c, 1/c}, c in (0, 1)
  DistanceTriple distances;
  FvdgResiduals gaps;
};

// Invertible pairs get the structural verdict from M. Noninvertible pairs are
// classified from the gap residuals alone; when both gaps vanish (orthogonal
// states) the lower one takes precedence and both are reported.
SaturationReport classify_pair(const DensityOperator& rho, const DensityOperator& sigma);

// For pure states: all nonvanishing products <rho|e_x><e_x|sigma> share one
// phase. Throws kDimensionMismatch, or kValidationError for non-unit vectors.
bool pure_fidelity_optimal(const Rank1Measurement& lambda, const CVector& rho_vec,
                           const CVector& sigma_vec);

struct PerturbationTrace {
  std::vector<double> deltas;
  std::vector<double> m_delta_norms;  // spectral norm of M_delta
  // Indexed [delta][x]; empty where e_x lies in ker rho.
  std::vector<std::vector<std::optional<Complex>>> mu;
  std::vector<std::vector<std::optional<double>>> residuals;
};

// Diagnostic only: residual ||sqrt(rho_d) (M_d - |mu_xd| I) e_x|| per delta.
// deltas must be strictly descending inside (0, 1); throws kInvalidDelta.
PerturbationTrace perturbation_trace(const DensityOperator& rho, const DensityOperator& sigma,
                                     const Rank1Measurement& lambda,
                                     const std::vector<double>& deltas);

}  // namespace entrobound
