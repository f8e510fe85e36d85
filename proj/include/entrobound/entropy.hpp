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

// All entropies in nats.
double von_neumann_entropy(const DensityOperator& rho);
// H(AB) - H(B) under the k-outer layout. Throws kDimensionMismatch.
double conditional_entropy(const DensityOperator& rho, int dim_a, int dim_b);
// Throws kOutOfRange outside [0, 1].
double binary_entropy(double x);

// T ln(d - 1) + h(T). Evaluated exactly as written, including the T = 1,
// d = 2 corner where it returns 0.
double audenaert_bound(double trace_dist, int d);
// 2 T ln d_A + (1 + T) h(T / (1 + T)).
double winter_bound(double trace_dist, int dim_a);

// x0 is the nontrivial root of ln x = 2 (1 - 1/x); the line through (1, 0)
// with slope 2 ln(x0)/x0 touches ln^2 at x0, which gives the concave majorant
// f used for u(d) = 2 sqrt(f(d)).
struct LipschitzConstants {
  double x0;
  double slope;

  double majorant(double x) const;
  double u(double x) const;
};

// Computed once by bisection on [e, 10].
const LipschitzConstants& lipschitz_constants();
// Integer d >= 1 only; 2 ln d for d >= 5.
double lipschitz_u(int d);

double sekatski_bound(double angle, int d);
// (u(d_A d_B) + u(d_B)) A.
double naive_conditional_bound(double angle, int dim_a, int dim_b);
// u(d_A) A for quantum-classical pairs.
double qc_continuity_bound(double angle, int dim_a);

// -sum v^2 ln v^2 + sum_k S_k ln S_k, with S_k the squared norm of block k.
double hc_of_vector(const SqrtVector& v);
double hc_of_vector(const RVector& v, int dim_a, int dim_b);

// The great circle from r to s on the unit sphere:
// v(theta) = cos(theta) r + sin(theta) t, w = dv/dtheta, with t the unit
// component of s orthogonal to r.
class PathState {
 public:
  // Throws kDimensionMismatch when the block structures differ.
  PathState(SqrtVector r, SqrtVector s);

  const SqrtVector& r() const { return r_; }
  const SqrtVector& s() const { return s_; }
  double theta0() const { return theta0_; }
  RVector v(double theta) const;
  RVector w(double theta) const;

 private:
  SqrtVector r_;
  SqrtVector s_;
  RVector t_;
  double theta0_;
};

// Analytic dH_c(v(theta))/dtheta over the indices where r or s is nonzero.
// Throws kOutOfRange unless 0 < theta < theta0.
double hc_derivative(const PathState& path, double theta);

enum class ConversionDirection {
  kAngleFromTrace,  // u(d_A) arccos(1 - T)
  kTraceFromAngle,  // sin(A), to feed trace-distance bounds
};

double convert_bounds(double value, ConversionDirection direction, int dim_a);
// u(d_A) sqrt(2 T), the small-T form of the angle-from-trace conversion.
double small_trace_conversion(double trace_dist, int dim_a);

}  // namespace entrobound
