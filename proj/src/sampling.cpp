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

#include "entrobound/sampling.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "entrobound/error.hpp"

namespace entrobound {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_at_least(int value, int lowest, const char* what) {
  if (value < lowest) {
    std::ostringstream os;
    os << what << " must be >= " << lowest << ", got " << value;
    fail(ErrorCode::kOutOfRange, os.str());
  }
}

RVector gaussian_unit(Rng& rng, int d) {
  RVector g(d);
  double n = 0.0;
  while (n == 0.0) {
    for (int i = 0; i < d; ++i) g(i) = rng.normal();
    n = g.norm();
  }
  return g / n;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

ClassicalDist sample_simplex(Rng& rng, int n) {
  require_at_least(n, 1, "simplex size");
  std::vector<double> w(n);
  double total = 0.0;
  while (total == 0.0) {
    total = 0.0;
    for (double& x : w) total += (x = rng.exponential());
  }
  for (double& x : w) x /= total;
  return ClassicalDist(std::move(w));
}

CMatrix sample_haar_unitary(Rng& rng, int d) {
  require_at_least(d, 1, "unitary dimension");
  CMatrix g(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) g(i, j) = Complex(rng.normal(), rng.normal()) / std::sqrt(2.0);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix& r = qr.matrixQR();
  for (int i = 0; i < d; ++i) {
    const Complex diag = r(i, i);
    const double mag = std::abs(diag);
    // Q diag(phase(R_ii)) pairs with a positive-diagonal R.
    if (mag > 0.0) q.col(i) *= diag / mag;
  }
  return q;
}

DensityOperator sample_density(Rng& rng, int d) {
  const ClassicalDist spectrum = sample_simplex(rng, d);
  const CMatrix u = sample_haar_unitary(rng, d);
  const RVector diag = Eigen::Map<const RVector>(spectrum.probs().data(), d);
  return make_density(
      HermitianMatrix::symmetrize(u * diag.cast<Complex>().asDiagonal() * u.adjoint()));
}

QCState sample_qc_state(Rng& rng, int dim_a, int dim_b) {
  require_at_least(dim_a, 1, "dim_a");
  require_at_least(dim_b, 1, "dim_b");
  const ClassicalDist weights = sample_simplex(rng, dim_b);
  std::vector<QCBlock> blocks;
  blocks.reserve(dim_b);
  for (int k = 0; k < dim_b; ++k) blocks.push_back({weights[k], sample_density(rng, dim_a)});
  return QCState(std::move(blocks));
}

std::pair<QCState, QCState> sample_qc_pair(Rng& rng, int dim_a, int dim_b) {
  QCState first = sample_qc_state(rng, dim_a, dim_b);
  QCState second = sample_qc_state(rng, dim_a, dim_b);
  return {std::move(first), std::move(second)};
}

ClassicalPairAtAngle sample_classical_pair_at_angle(Rng& rng, int d, double angle,
                                                    int max_rejects) {
  require_at_least(d, 2, "dimension");
  if (!(angle > 0.0 && angle < std::numbers::pi / 2)) {
    std::ostringstream os;
    os << "angle must lie in (0, pi/2), got " << angle;
    fail(ErrorCode::kOutOfRange, os.str());
  }
  const double c = std::cos(angle), sn = std::sin(angle);
  int rejects = 0;
  while (true) {
    const RVector r = gaussian_unit(rng, d).cwiseAbs();
    RVector t = gaussian_unit(rng, d);
    t -= t.dot(r) * r;
    t -= t.dot(r) * r;
    const double tn = t.norm();
    if (tn < 1e-12) continue;  // direction parallel to r; measure zero
    t /= tn;
    const RVector s = c * r + sn * t;
    if (s.minCoeff() < 0.0) {
      if (++rejects >= max_rejects) {
        std::ostringstream os;
        os << max_rejects << " consecutive rejections at angle " << angle << ", d = " << d;
        fail(ErrorCode::kRejectionBudgetExhausted, os.str());
      }
      continue;
    }
    const RVector p = r.cwiseAbs2() / r.squaredNorm();
    const RVector q = s.cwiseAbs2() / s.squaredNorm();
    return {r, s, ClassicalDist(std::vector<double>(p.data(), p.data() + d)),
            ClassicalDist(std::vector<double>(q.data(), q.data() + d))};
  }
}

}  // namespace entrobound
