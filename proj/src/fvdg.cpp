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

#include "entrobound/fvdg.hpp"

#include <algorithm>
#include <cmath>
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

void require_invertible(const DensityOperator& rho, const char* which) {
  if (!rho.invertible()) {
    fail(ErrorCode::kNotInvertible, std::string(which) + " is not invertible");
  }
}

HermitianMatrix difference(const DensityOperator& rho, const DensityOperator& sigma) {
  return HermitianMatrix::symmetrize(rho.matrix() - sigma.matrix());
}

// Relative comparison for the classical ratio tests.
bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

constexpr double kEntryZero = 1e-12;
constexpr double kRatio = 1e-9;

bool is_c1(const ClassicalDist& p, const ClassicalDist& q) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (std::abs(p[x] - q[x]) <= kEntryZero) continue;
    if (p[x] <= kEntryZero || q[x] <= kEntryZero) continue;
    return false;
  }
  return true;
}

bool is_c2(const ClassicalDist& p, const ClassicalDist& q) {
  bool equal = true, disjoint = true;
  for (std::size_t x = 0; x < p.size(); ++x) {
    equal = equal && std::abs(p[x] - q[x]) <= kEntryZero;
    disjoint = disjoint && (p[x] <= kEntryZero || q[x] <= kEntryZero);
  }
  if (equal || disjoint) return true;

  std::vector<double> ratios;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const bool pz = p[x] <= kEntryZero, qz = q[x] <= kEntryZero;
    if (pz && qz) continue;
    if (pz != qz) return false;  // b p(x) and p(x)/b vanish together
    ratios.push_back(q[x] / p[x]);
  }
  const double b = *std::min_element(ratios.begin(), ratios.end());
  if (b >= 1.0) return false;
  return std::all_of(ratios.begin(), ratios.end(), [b](double r) {
    return close_rel(r, b, kRatio) || close_rel(r, 1.0 / b, kRatio);
  });
}

// Groups ascending eigenvalues whose neighbours sit within relative
// tol::kSpectralCluster; returns the cluster means.
std::vector<double> cluster_centers(const RVector& values) {
  std::vector<double> centers;
  std::vector<int> counts;
  double last = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double v = values(i);
    if (!centers.empty() && close_rel(v, last, tol::kSpectralCluster)) {
      centers.back() += v;
      ++counts.back();
    } else {
      centers.push_back(v);
      counts.push_back(1);
    }
    last = v;
  }
  for (std::size_t k = 0; k < centers.size(); ++k) centers[k] /= counts[k];
  return centers;
}

}  // namespace

Rank1Measurement trace_optimal_measurements(const DensityOperator& rho,
                                            const DensityOperator& sigma) {
  require_same_dim(rho.dim(), sigma.dim());
  const HermitianMatrix diff = difference(rho, sigma);
  if (max_abs(diff.matrix()) == 0.0) return Rank1Measurement::computational(rho.dim());
  return Rank1Measurement(eig_hermitian(diff).vectors);
}

bool is_trace_optimal(const Rank1Measurement& lambda, const DensityOperator& rho,
                      const DensityOperator& sigma) {
  require_same_dim(rho.dim(), sigma.dim());
  require_same_dim(lambda.dim(), rho.dim());
  const PositiveNegativeParts pq = positive_negative_parts(difference(rho, sigma));
  const CMatrix& p = pq.positive.matrix();
  const CMatrix& q = pq.negative.matrix();
  const double tol_p = tol::kKernel * std::sqrt(max_abs(p));
  const double tol_q = tol::kKernel * std::sqrt(max_abs(q));
  for (Eigen::Index x = 0; x < lambda.dim(); ++x) {
    const auto e = lambda.vector(x);
    if ((p * e).norm() <= tol_p || (q * e).norm() <= tol_q) continue;
    return false;
  }
  return true;
}

Rank1Measurement fidelity_optimal_measurement(const DensityOperator& rho,
                                              const DensityOperator& sigma) {
  require_same_dim(rho.dim(), sigma.dim());
  require_invertible(rho, "rho");
  require_invertible(sigma, "sigma");
  return Rank1Measurement(eig_hermitian(m_operator(rho.hermitian(), sigma.hermitian())).vectors);
}

bool is_fidelity_optimal(const Rank1Measurement& lambda, const DensityOperator& rho,
                         const DensityOperator& sigma) {
  require_same_dim(rho.dim(), sigma.dim());
  require_same_dim(lambda.dim(), rho.dim());
  require_invertible(rho, "rho");
  require_invertible(sigma, "sigma");
  const CMatrix m = m_operator(rho.hermitian(), sigma.hermitian()).matrix();
  const double tolerance = tol::kEigenvectorResidual * std::max(1.0, max_abs(m));
  for (Eigen::Index x = 0; x < lambda.dim(); ++x) {
    const CVector e = lambda.vector(x);
    const CVector me = m * e;
    if ((me - e.dot(me) * e).norm() > tolerance) return false;
  }
  return true;
}

std::string_view classical_saturation_name(ClassicalSaturation c) {
  switch (c) {
    case ClassicalSaturation::kC1: return "C1";
    case ClassicalSaturation::kC2: return "C2";
    case ClassicalSaturation::kBoth: return "Both";
    case ClassicalSaturation::kNeither: return "Neither";
  }
  return "?";
}

ClassicalSaturation classical_saturation_class(const ClassicalDist& p, const ClassicalDist& q) {
  require_same_dim(static_cast<Eigen::Index>(p.size()), static_cast<Eigen::Index>(q.size()));
  const bool c1 = is_c1(p, q), c2 = is_c2(p, q);
  if (c1 && c2) return ClassicalSaturation::kBoth;
  if (c1) return ClassicalSaturation::kC1;
  if (c2) return ClassicalSaturation::kC2;
  return ClassicalSaturation::kNeither;
}

std::string_view pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::kEqual: return "Equal";
    case PairClass::kLowerSaturated: return "LowerSaturated";
    case PairClass::kUpperSaturated: return "UpperSaturated";
    case PairClass::kNeitherSaturated: return "NeitherSaturated";
  }
  return "?";
}

SaturationReport classify_pair(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_dim(rho.dim(), sigma.dim());
  SaturationReport report{PairClass::kNeitherSaturated,
                          rho.invertible() && sigma.invertible(),
                          std::nullopt,
                          RVector(),
                          std::nullopt,
                          std::nullopt,
                          std::nullopt,
                          distances(rho, sigma),
                          {}};
  report.gaps = fvdg_residuals(report.distances);

  const CMatrix diff = rho.matrix() - sigma.matrix();
  const bool equal = max_abs(diff) <= tol::kEqualStates;

  if (report.invertible) {
    HermitianMatrix m = m_operator(rho.hermitian(), sigma.hermitian());
    report.spectrum_m = eig_hermitian(m).values;
    report.riccati_residual = max_abs(m.matrix() * rho.matrix() * m.matrix() - sigma.matrix());
    const double scale = max_abs(m.matrix()) * max_abs(diff);
    const CMatrix commutator = m.matrix() * diff - diff * m.matrix();
    report.commutator_residual = scale > 0.0 ? max_abs(commutator) / scale : 0.0;

    const std::vector<double> centers = cluster_centers(report.spectrum_m);
    if (centers.size() == 2 && centers[0] < 1.0 &&
        std::abs(centers[0] * centers[1] - 1.0) <= tol::kSpectralCluster) {
      report.c_value = centers[0];
    }
    report.m = std::move(m);

    if (equal) {
      report.pair_class = PairClass::kEqual;
    } else if (report.c_value && *report.commutator_residual <= tol::kCommutator) {
      report.pair_class = PairClass::kUpperSaturated;
    }
    return report;
  }

  if (equal) {
    report.pair_class = PairClass::kEqual;
  } else if (std::abs(report.gaps.lower_gap) <= tol::kSaturationGap) {
    report.pair_class = PairClass::kLowerSaturated;
  } else if (std::abs(report.gaps.upper_gap) <= tol::kSaturationGap) {
    report.pair_class = PairClass::kUpperSaturated;
  }
  return report;
}

bool pure_fidelity_optimal(const Rank1Measurement& lambda, const CVector& rho_vec,
                           const CVector& sigma_vec) {
  require_same_dim(rho_vec.size(), sigma_vec.size());
  require_same_dim(lambda.dim(), rho_vec.size());
  if (std::abs(rho_vec.norm() - 1.0) > tol::kUnitNorm ||
      std::abs(sigma_vec.norm() - 1.0) > tol::kUnitNorm) {
    fail(ErrorCode::kValidationError, "pure-state vectors must have unit norm");
  }
  std::optional<Complex> phase;
  double phase_weight = 0.0;
  std::vector<Complex> products;
  for (Eigen::Index x = 0; x < lambda.dim(); ++x) {
    const Complex a = lambda.vector(x).dot(rho_vec);
    const Complex b = lambda.vector(x).dot(sigma_vec);
    if (std::abs(a) <= tol::kOverlapZero || std::abs(b) <= tol::kOverlapZero) continue;
    const Complex z = std::conj(a) * b;
    products.push_back(z);
    // The largest product carries the most accurate phase.
    if (std::abs(z) > phase_weight) {
      phase_weight = std::abs(z);
      phase = z / std::abs(z);
    }
  }
  return std::all_of(products.begin(), products.end(),
                     [&](Complex z) { return std::abs(z / std::abs(z) - *phase) <= tol::kPhase; });
}

PerturbationTrace perturbation_trace(const DensityOperator& rho, const DensityOperator& sigma,
                                     const Rank1Measurement& lambda,
                                     const std::vector<double>& deltas) {
  require_same_dim(rho.dim(), sigma.dim());
  require_same_dim(lambda.dim(), rho.dim());
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const bool inside = deltas[i] > 0.0 && deltas[i] < 1.0;
    const bool descending = i == 0 || deltas[i] < deltas[i - 1];
    if (!inside || !descending) {
      std::ostringstream os;
      os << "deltas must be strictly descending in (0, 1); bad entry " << deltas[i];
      fail(ErrorCode::kInvalidDelta, os.str());
    }
  }

  PerturbationTrace trace;
  trace.deltas = deltas;
  const Eigen::Index d = rho.dim();
  for (double delta : deltas) {
    const HermitianMatrix rho_d = depolarize(rho.hermitian(), delta);
    const HermitianMatrix sigma_d = depolarize(sigma.hermitian(), delta);
    const CMatrix sqrt_rho = mat_sqrt(rho_d).matrix();
    const CMatrix sqrt_sigma = mat_sqrt(sigma_d).matrix();
    const CMatrix m = m_operator(rho_d, sigma_d).matrix();

    // Polar part of sqrt(rho_d) sqrt(sigma_d) = W S V^dagger: U = V W^dagger
    // makes sqrt(rho_d) sqrt(sigma_d) U positive.
    Eigen::JacobiSVD<CMatrix> svd(sqrt_rho * sqrt_sigma, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const CMatrix u = svd.matrixV() * svd.matrixU().adjoint();

    trace.m_delta_norms.push_back(eig_hermitian(HermitianMatrix::symmetrize(m)).max_value());
    std::vector<std::optional<Complex>> mus(d);
    std::vector<std::optional<double>> residuals(d);
    for (Eigen::Index x = 0; x < d; ++x) {
      const CVector e = lambda.vector(x);
      if (e.dot(rho.matrix() * e).real() <= tol::kOverlapZero) continue;  // e in ker rho
      const Complex mu = e.dot(sqrt_sigma * u * sqrt_rho * e) / e.dot(rho_d.matrix() * e).real();
      const CVector shifted = m * e - std::abs(mu) * e;
      mus[x] = mu;
      residuals[x] = (sqrt_rho * shifted).norm();
    }
    trace.mu.push_back(std::move(mus));
    trace.residuals.push_back(std::move(residuals));
  }
  return trace;
}

}  // namespace entrobound
