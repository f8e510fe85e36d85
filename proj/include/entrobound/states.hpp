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

#include <span>
#include <vector>

#include "entrobound/linalg.hpp"

namespace entrobound {

// Hermitian, positive semidefinite after clamping, unit trace.
class DensityOperator {
 public:
  Eigen::Index dim() const { return matrix_.dim(); }
  const HermitianMatrix& hermitian() const { return matrix_; }
  const CMatrix& matrix() const { return matrix_.matrix(); }
  const SpectralDecomposition& spectrum() const { return spectrum_; }
  // Eigenvalues (ascending) with rounding-level negatives clamped to zero.
  const RVector& eigenvalues() const { return spectrum_.values; }
  bool invertible() const { return is_invertible(spectrum_); }

  static DensityOperator maximally_mixed(Eigen::Index dim);
  static DensityOperator pure(const CVector& psi);

 private:
  friend DensityOperator make_density(const HermitianMatrix& m);
  DensityOperator(HermitianMatrix m, SpectralDecomposition s)
      : matrix_(std::move(m)), spectrum_(std::move(s)) {}

  HermitianMatrix matrix_;
  SpectralDecomposition spectrum_;
};

// Throws kNegativeEigenvalue or kTraceNotOne.
DensityOperator make_density(const HermitianMatrix& m);
// Also throws kNonHermitian.
DensityOperator make_density(const CMatrix& m);

class ClassicalDist {
 public:
  // Throws kValidationError unless entries are >= 0 and sum to 1 within
  // tol::kDistribution.
  explicit ClassicalDist(std::vector<double> probs);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

struct QCBlock {
  double weight;
  DensityOperator conditional;
};

// sum_k weight_k rho_k (x) |f_k><f_k| with the classical basis fixed to the
// standard one. Joint indices put the classical label k outermost:
// index = k * dim_a + j.
class QCState {
 public:
  // Throws kDimensionMismatch if the conditionals disagree on dimension and
  // kValidationError for negative weights or weights not summing to one.
  explicit QCState(std::vector<QCBlock> blocks);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return static_cast<int>(blocks_.size()); }
  const std::vector<QCBlock>& blocks() const { return blocks_; }

 private:
  std::vector<QCBlock> blocks_;
  int dim_a_;
};

// Entries sqrt(weight_k p_jk), k outer and j inner, with p_jk descending
// inside each block.
struct SqrtVector {
  RVector entries;
  int dim_a;
  int dim_b;
};

DensityOperator qc_embed(const QCState& s);

// Traces out the inner (A) factor under the k-outer index convention.
DensityOperator partial_trace_A(const DensityOperator& rho, int dim_a, int dim_b);

SqrtVector sqrt_vector(const QCState& s);

// arccos of the clamped dot product, in [0, pi/2].
double theta0(const SqrtVector& r, const SqrtVector& s);

// Exact block-structure check under the k-outer convention: every entry
// coupling different classical labels must be at most `tolerance` in
// magnitude. No basis search is attempted.
bool is_block_diagonal(const DensityOperator& rho, int dim_a, int dim_b, double tolerance = 1e-12);
// Throws kValidationError when the state is not block diagonal. Blocks with
// zero weight get a maximally mixed conditional.
QCState qc_from_dense(const DensityOperator& rho, int dim_a, int dim_b);

}  // namespace entrobound
