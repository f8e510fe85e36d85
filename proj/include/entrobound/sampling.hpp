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
#include <random>
#include <utility>

#include "entrobound/linalg.hpp"
#include "entrobound/states.hpp"

namespace entrobound {

// Single-owner random stream. The engine is seeded through SplitMix64 so that
// neighbouring seeds (the seed + stream rule) give unrelated sequences.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  // Stream `index` of a base seed: Rng(base + index).
  static Rng stream(std::uint64_t base, std::uint64_t index) { return Rng(base + index); }

  std::uint64_t seed() const { return seed_; }
  std::mt19937_64& engine() { return engine_; }

  double normal() { return normal_(engine_); }
  double exponential() { return exponential_(engine_); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::exponential_distribution<double> exponential_{1.0};
};

// Uniform on the standard simplex (flat Dirichlet) via normalized Exp(1)
// draws. Throws kOutOfRange for n < 1.
ClassicalDist sample_simplex(Rng& rng, int n);

// Haar measure: QR of a complex Ginibre matrix with R's diagonal made real
// positive.
CMatrix sample_haar_unitary(Rng& rng, int d);

// U diag(simplex) U^dagger with U Haar.
DensityOperator sample_density(Rng& rng, int d);

// Simplex weights over d_B blocks, each conditional drawn by sample_density.
QCState sample_qc_state(Rng& rng, int dim_a, int dim_b);
std::pair<QCState, QCState> sample_qc_pair(Rng& rng, int dim_a, int dim_b);

struct ClassicalPairAtAngle {
  RVector r;  // square roots of p; unit norm, non-negative
  RVector s;  // r rotated by exactly the requested angle
  ClassicalDist p;
  ClassicalDist q;
};

// r = |g|/||g||, s = cos(A) r + sin(A) t with t a random unit direction
// orthogonal to r. Draws with a negative entry in s are rejected; after
// max_rejects consecutive rejections throws kRejectionBudgetExhausted.
ClassicalPairAtAngle sample_classical_pair_at_angle(Rng& rng, int d, double angle,
                                                    int max_rejects = 1000);

}  // namespace entrobound
