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

#include "entrobound/linalg.hpp"
#include "entrobound/states.hpp"

namespace entrobound {

// An orthonormal basis, stored as the columns of a unitary matrix, viewed as
// the rank-1 projective measurement {|e_x><e_x|}.
class Rank1Measurement {
 public:
  // Throws kNotOrthonormal when the Gram residual exceeds
  // tol::kOrthonormal.
  explicit Rank1Measurement(CMatrix basis);
  static Rank1Measurement computational(Eigen::Index dim);

  Eigen::Index dim() const { return basis_.rows(); }
  const CMatrix& basis() const { return basis_; }
  auto vector(Eigen::Index x) const { return basis_.col(x); }

 private:
  CMatrix basis_;
};

struct DistanceTriple {
  double trace_distance;
  double fidelity;
  double angular;
};

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);
double fidelity(const DensityOperator& rho, const DensityOperator& sigma);
double angular_distance(const DensityOperator& rho, const DensityOperator& sigma);
DistanceTriple distances(const DensityOperator& rho, const DensityOperator& sigma);

// arccos with the argument clamped to [0, 1] and a snap to exactly zero when
// 1 - F is at the rounding floor.
double angle_from_fidelity(double f);

double classical_trace_distance(const ClassicalDist& p, const ClassicalDist& q);
double classical_fidelity(const ClassicalDist& p, const ClassicalDist& q);

// probs(x) = <e_x| rho |e_x>.
ClassicalDist measure(const Rank1Measurement& lambda, const DensityOperator& rho);

struct FvdgResiduals {
  double lower_gap;  // T - (1 - F)
  double upper_gap;  // sqrt(1 - F^2) - T
};

FvdgResiduals fvdg_residuals(const DensityOperator& rho, const DensityOperator& sigma);
FvdgResiduals fvdg_residuals(const DistanceTriple& d);

}  // namespace entrobound
