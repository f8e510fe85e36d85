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

#include "entrobound/entropy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "entrobound/error.hpp"

namespace entrobound {

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << what << " must lie in [0, 1], got " << x;
    fail(ErrorCode::kOutOfRange, os.str());
  }
}

void require_angle(double a) {
  if (!(a >= 0.0 && a <= std::numbers::pi / 2)) {
    std::ostringstream os;
    os << "angle must lie in [0, pi/2], got " << a;
    fail(ErrorCode::kOutOfRange, os.str());
  }
}

void require_dim(int d, int lowest, const char* what) {
  if (d < lowest) {
    std::ostringstream os;
    os << what << " must be >= " << lowest << ", got " << d;
    fail(ErrorCode::kOutOfRange, os.str());
  }
}

LipschitzConstants solve_constants() {
  auto g = [](double x) { return std::log(x) - 2.0 * (1.0 - 1.0 / x); };
  double lo = std::numbers::e, hi = 10.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  const double x0 = 0.5 * (lo + hi);
  return {x0, 2.0 * std::log(x0) / x0};
}

}  // namespace

double von_neumann_entropy(const DensityOperator& rho) {
  double h = 0.0;
  for (double p : rho.eigenvalues()) h -= xlogx(p);
  return std::max(h, 0.0);
}

double conditional_entropy(const DensityOperator& rho, int dim_a, int dim_b) {
  return von_neumann_entropy(rho) - von_neumann_entropy(partial_trace_A(rho, dim_a, dim_b));
}

double binary_entropy(double x) {
  require_unit_interval(x, "binary entropy argument");
  return -xlogx(x) - xlogx(1.0 - x);
}

double audenaert_bound(double trace_dist, int d) {
  require_unit_interval(trace_dist, "trace distance");
  require_dim(d, 2, "dimension");
  return trace_dist * std::log(d - 1.0) + binary_entropy(trace_dist);
}

double winter_bound(double trace_dist, int dim_a) {
  require_unit_interval(trace_dist, "trace distance");
  require_dim(dim_a, 1, "dimension");
  return 2.0 * trace_dist * std::log(static_cast<double>(dim_a)) +
         (1.0 + trace_dist) * binary_entropy(trace_dist / (1.0 + trace_dist));
}

double LipschitzConstants::majorant(double x) const {
  if (x <= x0) return slope * (x - 1.0);
  const double l = std::log(x);
  return l * l;
}

double LipschitzConstants::u(double x) const {
  // Above x0 the majorant is ln^2, so return 2 ln x directly rather than
  // round-tripping through a square root.
  if (x <= x0) return 2.0 * std::sqrt(std::max(0.0, slope * (x - 1.0)));
  return 2.0 * std::log(x);
}

const LipschitzConstants& lipschitz_constants() {
  static const LipschitzConstants constants = solve_constants();
  return constants;
}

double lipschitz_u(int d) {
  require_dim(d, 1, "dimension");
  return lipschitz_constants().u(static_cast<double>(d));
}

double sekatski_bound(double angle, int d) {
  require_angle(angle);
  return lipschitz_u(d) * angle;
}

double naive_conditional_bound(double angle, int dim_a, int dim_b) {
  require_angle(angle);
  require_dim(dim_a, 1, "dim_a");
  require_dim(dim_b, 1, "dim_b");
  return (lipschitz_u(dim_a * dim_b) + lipschitz_u(dim_b)) * angle;
}

double qc_continuity_bound(double angle, int dim_a) {
  require_angle(angle);
  return lipschitz_u(dim_a) * angle;
}

double hc_of_vector(const RVector& v, int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1 || v.size() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    std::ostringstream os;
    os << "vector of length " << v.size() << " does not fit " << dim_a << " x " << dim_b;
    fail(ErrorCode::kDimensionMismatch, os.str());
  }
  double h = 0.0;
  for (int k = 0; k < dim_b; ++k) {
    double block = 0.0;
    for (int j = 0; j < dim_a; ++j) {
      const double p = v(k * dim_a + j) * v(k * dim_a + j);
      h -= xlogx(p);
      block += p;
    }
    h += xlogx(block);
  }
  return h;
}

double hc_of_vector(const SqrtVector& v) { return hc_of_vector(v.entries, v.dim_a, v.dim_b); }

PathState::PathState(SqrtVector r, SqrtVector s) : r_(std::move(r)), s_(std::move(s)) {
  theta0_ = entrobound::theta0(r_, s_);
  RVector orth = s_.entries - s_.entries.dot(r_.entries) * r_.entries;
  orth -= orth.dot(r_.entries) * r_.entries;  // second pass for nearby r, s
  const double n = orth.norm();
  // theta0 = 0 leaves t undefined; v is then constant and no interior theta
  // exists, so a zero t is harmless.
  t_ = theta0_ > 0.0 && n > 0.0 ? RVector(orth / n) : RVector::Zero(orth.size());
}

RVector PathState::v(double theta) const {
  return std::cos(theta) * r_.entries + std::sin(theta) * t_;
}

RVector PathState::w(double theta) const {
  return -std::sin(theta) * r_.entries + std::cos(theta) * t_;
}

double hc_derivative(const PathState& path, double theta) {
  if (!(theta > 0.0 && theta < path.theta0())) {
    std::ostringstream os;
    os << "theta " << theta << " outside (0, " << path.theta0() << ")";
    fail(ErrorCode::kOutOfRange, os.str());
  }
  const int da = path.r().dim_a, db = path.r().dim_b;
  const RVector& r = path.r().entries;
  const RVector& s = path.s().entries;
  const RVector v = path.v(theta);
  const RVector w = path.w(theta);
  double acc = 0.0;
  for (int k = 0; k < db; ++k) {
    double block = 0.0;
    for (int j = 0; j < da; ++j) block += v(k * da + j) * v(k * da + j);
    if (block <= 0.0) continue;
    for (int j = 0; j < da; ++j) {
      const int i = k * da + j;
      if (r(i) == 0.0 && s(i) == 0.0) continue;
      const double p = v(i) * v(i);
      if (p <= 0.0) continue;  // endpoint rounding; v > 0 on the open path
      acc += v(i) * w(i) * std::log(p / block);
    }
  }
  return -2.0 * acc;
}

double convert_bounds(double value, ConversionDirection direction, int dim_a) {
  switch (direction) {
    case ConversionDirection::kAngleFromTrace:
      require_unit_interval(value, "trace distance");
      return lipschitz_u(dim_a) * std::acos(1.0 - value);
    case ConversionDirection::kTraceFromAngle:
      require_angle(value);
      require_dim(dim_a, 1, "dimension");
      return std::sin(value);
  }
  fail(ErrorCode::kOutOfRange, "unknown conversion direction");
}

double small_trace_conversion(double trace_dist, int dim_a) {
  require_unit_interval(trace_dist, "trace distance");
  return lipschitz_u(dim_a) * std::sqrt(2.0 * trace_dist);
}

}  // namespace entrobound
