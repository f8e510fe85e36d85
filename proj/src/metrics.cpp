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

#include "entrobound/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "entrobound/error.hpp"
#include "entrobound/tolerances.hpp"

namespace entrobound {

namespace {

void require_same_dim(Eigen::Index a, Eigen::Index b) {
  if (a != b) {
    std::ostringstream os;
    os << "dimension mismatch: " << a << " vs " << b;
    fail(ErrorCode::kDimensionMismatch, os.str());
  }
}

Eigen::Index support_rank(const RVector& values) {
  const double top = values.maxCoeff();
  return (values.array() > tol::kSupportRelative * top).count();
}

// Sum of square roots of the eigenvalues of sqrt(rho) sigma sqrt(rho),
// evaluated on the support of rho so rounding-level eigenvalues outside it
// never reach the square root.
double fidelity_on_support(const DensityOperator& rho, const DensityOperator& sigma) {
  const SpectralDecomposition& s = rho.spectrum();
  const double top = s.values.maxCoeff();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < s.values.size(); ++i) {
    if (s.values(i) > tol::kSupportRelative * top) keep.push_back(i);
  }
  const auto r = static_cast<Eigen::Index>(keep.size());
  CMatrix v(rho.dim(), r);
  RVector root(r);
  for (Eigen::Index i = 0; i < r; ++i) {
    v.col(i) = s.vectors.col(keep[i]);
    root(i) = std::sqrt(s.values(keep[i]));
  }
  const CMatrix compressed = root.cast<Complex>().asDiagonal() *
                             (v.adjoint() * sigma.matrix() * v) * root.cast<Complex>().asDiagonal();
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (compressed + compressed.adjoint()),
                                                Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::kNoConvergence, "eigensolver failed in fidelity");
  }
  double f = 0.0;
  for (Eigen::Index i = 0; i < r; ++i) f += std::sqrt(std::max(solver.eigenvalues()(i), 0.0));
  return f;
}

}  // namespace

Rank1Measurement::Rank1Measurement(CMatrix basis) : basis_(std::move(basis)) {
  if (basis_.rows() == 0 || basis_.rows() != basis_.cols()) {
    fail(ErrorCode::kDimensionMismatch, "measurement basis must be a square matrix");
  }
  const CMatrix gram = basis_.adjoint() * basis_;
  const double residual = max_abs(gram - CMatrix::Identity(basis_.rows(), basis_.cols()));
  if (residual > tol::kOrthonormal) {
    std::ostringstream os;
    os << "basis is not orthonormal: Gram residual " << residual;
    fail(ErrorCode::kNotOrthonormal, os.str());
  }
}

Rank1Measurement Rank1Measurement::computational(Eigen::Index dim) {
  return Rank1Measurement(CMatrix::Identity(dim, dim));
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_dim(rho.dim(), sigma.dim());
  const HermitianMatrix diff = HermitianMatrix::symmetrize(rho.matrix() - sigma.matrix());
  const double t = 0.5 * eig_hermitian(diff).values.cwiseAbs().sum();
  return std::clamp(t, 0.0, 1.0);
}

double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_dim(rho.dim(), sigma.dim());
  const Eigen::Index rank_rho = support_rank(rho.eigenvalues());
  const Eigen::Index rank_sigma = support_rank(sigma.eigenvalues());
  double f = 0.0;
  if (rank_rho < rank_sigma) {
    f = fidelity_on_support(rho, sigma);
  } else if (rank_sigma < rank_rho) {
    f = fidelity_on_support(sigma, rho);
  } else {
    f = 0.5 * (fidelity_on_support(rho, sigma) + fidelity_on_support(sigma, rho));
  }
  return std::clamp(f, 0.0, 1.0);
}

double angle_from_fidelity(double f) {
  const double clamped = std::clamp(f, 0.0, 1.0);
  if (1.0 - clamped <= 4.0 * std::numeric_limits<double>::epsilon()) return 0.0;
  return std::acos(clamped);
}

double angular_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  return angle_from_fidelity(fidelity(rho, sigma));
}

DistanceTriple distances(const DensityOperator& rho, const DensityOperator& sigma) {
  const double f = fidelity(rho, sigma);
  return {trace_distance(rho, sigma), f, angle_from_fidelity(f)};
}

double classical_trace_distance(const ClassicalDist& p, const ClassicalDist& q) {
  require_same_dim(static_cast<Eigen::Index>(p.size()), static_cast<Eigen::Index>(q.size()));
  double acc = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) acc += std::abs(p[x] - q[x]);
  return std::clamp(0.5 * acc, 0.0, 1.0);
}

double classical_fidelity(const ClassicalDist& p, const ClassicalDist& q) {
  require_same_dim(static_cast<Eigen::Index>(p.size()), static_cast<Eigen::Index>(q.size()));
  double acc = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) acc += std::sqrt(p[x] * q[x]);
  return std::clamp(acc, 0.0, 1.0);
}

ClassicalDist measure(const Rank1Measurement& lambda, const DensityOperator& rho) {
  require_same_dim(lambda.dim(), rho.dim());
  std::vector<double> probs(lambda.dim());
  double total = 0.0;
  for (Eigen::Index x = 0; x < lambda.dim(); ++x) {
    const auto e = lambda.vector(x);
    probs[x] = std::max((e.adjoint() * rho.matrix() * e)(0, 0).real(), 0.0);
    total += probs[x];
  }
  // Renormalize away rounding so the result is a distribution to machine
  // precision; the orthonormality check already bounds the drift.
  for (double& p : probs) p /= total;
  return ClassicalDist(std::move(probs));
}

FvdgResiduals fvdg_residuals(const DistanceTriple& d) {
  return {d.trace_distance - (1.0 - d.fidelity),
          std::sqrt(std::max(0.0, 1.0 - d.fidelity * d.fidelity)) - d.trace_distance};
}

FvdgResiduals fvdg_residuals(const DensityOperator& rho, const DensityOperator& sigma) {
  return fvdg_residuals(distances(rho, sigma));
}

}  // namespace entrobound
