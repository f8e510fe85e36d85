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

#include "entrobound/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "entrobound/error.hpp"
#include "entrobound/tolerances.hpp"

namespace entrobound {

namespace {

void require_product_dim(Eigen::Index dim, int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1 || dim != static_cast<Eigen::Index>(dim_a) * dim_b) {
    std::ostringstream os;
    os << "state of dimension " << dim << " does not factor as " << dim_a << " x " << dim_b;
    fail(ErrorCode::kDimensionMismatch, os.str());
  }
}

}  // namespace

DensityOperator make_density(const HermitianMatrix& m) {
  SpectralDecomposition s = eig_hermitian(m);
  s.values = clamped_psd_values(s.values);
  const double trace = m.matrix().trace().real();
  if (std::abs(trace - 1.0) > tol::kTrace) {
    std::ostringstream os;
    os << "trace must be 1, got " << trace;
    fail(ErrorCode::kTraceNotOne, os.str());
  }
  return DensityOperator(m, std::move(s));
}

DensityOperator make_density(const CMatrix& m) { return make_density(HermitianMatrix::from(m)); }

DensityOperator DensityOperator::maximally_mixed(Eigen::Index dim) {
  return make_density(HermitianMatrix::from_real_diagonal(RVector::Constant(dim, 1.0 / dim)));
}

DensityOperator DensityOperator::pure(const CVector& psi) {
  const double norm = psi.norm();
  if (psi.size() == 0 || std::abs(norm - 1.0) > tol::kUnitNorm) {
    fail(ErrorCode::kValidationError, "pure state vector must have unit norm");
  }
  const CVector unit = psi / norm;
  return make_density(HermitianMatrix::symmetrize(unit * unit.adjoint()));
}

ClassicalDist::ClassicalDist(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) fail(ErrorCode::kValidationError, "empty distribution");
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) {
      std::ostringstream os;
      os << "probability entries must be non-negative, got " << p;
      fail(ErrorCode::kValidationError, os.str());
    }
    total += p;
  }
  if (std::abs(total - 1.0) > tol::kDistribution) {
    std::ostringstream os;
    os << "probabilities must sum to 1, got " << total;
    fail(ErrorCode::kValidationError, os.str());
  }
}

QCState::QCState(std::vector<QCBlock> blocks) : blocks_(std::move(blocks)), dim_a_(0) {
  if (blocks_.empty()) fail(ErrorCode::kValidationError, "QC state needs at least one block");
  dim_a_ = static_cast<int>(blocks_.front().conditional.dim());
  double total = 0.0;
  for (const QCBlock& b : blocks_) {
    if (b.conditional.dim() != dim_a_) {
      fail(ErrorCode::kDimensionMismatch, "conditional states must share one dimension");
    }
    if (!(b.weight >= 0.0)) fail(ErrorCode::kValidationError, "block weights must be >= 0");
    total += b.weight;
  }
  if (std::abs(total - 1.0) > tol::kDistribution) {
    std::ostringstream os;
    os << "block weights must sum to 1, got " << total;
    fail(ErrorCode::kValidationError, os.str());
  }
}

DensityOperator qc_embed(const QCState& s) {
  const int da = s.dim_a();
  const Eigen::Index d = static_cast<Eigen::Index>(da) * s.dim_b();
  CMatrix joint = CMatrix::Zero(d, d);
  for (int k = 0; k < s.dim_b(); ++k) {
    const QCBlock& b = s.blocks()[k];
    joint.block(k * da, k * da, da, da) = b.weight * b.conditional.matrix();
  }
  return make_density(HermitianMatrix::symmetrize(joint));
}

DensityOperator partial_trace_A(const DensityOperator& rho, int dim_a, int dim_b) {
  require_product_dim(rho.dim(), dim_a, dim_b);
  CMatrix reduced = CMatrix::Zero(dim_b, dim_b);
  const CMatrix& m = rho.matrix();
  for (int k = 0; k < dim_b; ++k) {
    for (int l = 0; l < dim_b; ++l) {
      Complex acc = 0.0;
      for (int j = 0; j < dim_a; ++j) acc += m(k * dim_a + j, l * dim_a + j);
      reduced(k, l) = acc;
    }
  }
  return make_density(HermitianMatrix::symmetrize(reduced));
}

SqrtVector sqrt_vector(const QCState& s) {
  const int da = s.dim_a();
  SqrtVector out{RVector::Zero(static_cast<Eigen::Index>(da) * s.dim_b()), da, s.dim_b()};
  std::vector<int> order(da);
  for (int k = 0; k < s.dim_b(); ++k) {
    const QCBlock& b = s.blocks()[k];
    const RVector& p = b.conditional.eigenvalues();
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&p](int lhs, int rhs) { return p(lhs) > p(rhs); });
    for (int j = 0; j < da; ++j) {
      out.entries(k * da + j) = std::sqrt(b.weight * p(order[j]));
    }
  }
  return out;
}

double theta0(const SqrtVector& r, const SqrtVector& s) {
  if (r.dim_a != s.dim_a || r.dim_b != s.dim_b || r.entries.size() != s.entries.size()) {
    fail(ErrorCode::kDimensionMismatch, "square-root vectors have different block structure");
  }
  const double dot = std::clamp(r.entries.dot(s.entries), 0.0, 1.0);
  // Same rounding snap as the angular distance: equal vectors whose dot
  // product lands an ulp below 1 would otherwise report an angle near 1e-8.
  if (1.0 - dot <= 4.0 * std::numeric_limits<double>::epsilon()) return 0.0;
  return std::acos(dot);
}

bool is_block_diagonal(const DensityOperator& rho, int dim_a, int dim_b, double tolerance) {
  require_product_dim(rho.dim(), dim_a, dim_b);
  const CMatrix& m = rho.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (r / dim_a != c / dim_a && std::abs(m(r, c)) > tolerance) return false;
    }
  }
  return true;
}

QCState qc_from_dense(const DensityOperator& rho, int dim_a, int dim_b) {
  if (!is_block_diagonal(rho, dim_a, dim_b)) {
    fail(ErrorCode::kValidationError, "state is not block diagonal over the classical register");
  }
  std::vector<QCBlock> blocks;
  blocks.reserve(dim_b);
  std::vector<double> weights(dim_b);
  for (int k = 0; k < dim_b; ++k) {
    weights[k] =
        std::max(rho.matrix().block(k * dim_a, k * dim_a, dim_a, dim_a).trace().real(), 0.0);
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (int k = 0; k < dim_b; ++k) {
    const double w = weights[k] / total;
    if (weights[k] <= 1e-15) {
      blocks.push_back({w, DensityOperator::maximally_mixed(dim_a)});
      continue;
    }
    const CMatrix block = rho.matrix().block(k * dim_a, k * dim_a, dim_a, dim_a) / weights[k];
    blocks.push_back({w, make_density(HermitianMatrix::symmetrize(block))});
  }
  return QCState(std::move(blocks));
}

}  // namespace entrobound
