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

#include <cmath>
#include <numbers>
#include <random>

#include <unsupported/Eigen/KroneckerProduct>

#include "entrobound/entropy.hpp"
#include "entrobound/error.hpp"
#include "entrobound/metrics.hpp"
#include "test_util.hpp"

namespace eb = entrobound;
using eb::CMatrix;
using eb::RVector;
using eb::testing::diag_density;

namespace {

constexpr double kPi = std::numbers::pi;

// Principal-branch Lambert W by Halley iteration; only used as an oracle.
double lambert_w0(double z) {
  double w = z < 1.0 ? z : std::log(z);
  for (int i = 0; i < 100; ++i) {
    const double e = std::exp(w);
    const double f = w * e - z;
    const double step = f / (e * (w + 1) - (w + 2) * f / (2 * w + 2));
    w -= step;
    if (std::abs(step) < 1e-16) break;
  }
  return w;
}

eb::QCState random_qc(std::mt19937_64& gen, int da, int db) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(db);
  double total = 0.0;
  for (double& x : w) total += (x = u(gen) + 1e-3);
  std::vector<eb::QCBlock> blocks;
  for (int k = 0; k < db; ++k) {
    const int rank = 1 + static_cast<int>(u(gen) * da) % da;
    blocks.push_back({w[k] / total, eb::testing::random_density(gen, da, rank)});
  }
  return eb::QCState(std::move(blocks));
}

eb::DensityOperator max_entangled(int d) {
  CMatrix psi = CMatrix::Zero(d * d, 1);
  for (int i = 0; i < d; ++i) psi(i * d + i, 0) = 1.0 / std::sqrt(double(d));
  return eb::make_density(CMatrix(psi * psi.adjoint()));
}

}  // namespace

TEST(VonNeumann, Examples) {
  EXPECT_EQ(eb::von_neumann_entropy(diag_density({1, 0, 0})), 0.0);
  for (int d = 1; d <= 6; ++d) {
    EXPECT_NEAR(eb::von_neumann_entropy(eb::DensityOperator::maximally_mixed(d)),
                std::log(double(d)), 1e-14);
  }
  const double expected = -0.75 * std::log(0.75) - 0.25 * std::log(0.25);
  EXPECT_NEAR(eb::von_neumann_entropy(diag_density({0.75, 0.25})), expected, 1e-15);
  EXPECT_NEAR(expected, 0.5623, 1e-4);
}

TEST(ConditionalEntropy, Examples) {
  EXPECT_NEAR(eb::conditional_entropy(max_entangled(2), 2, 2), -std::log(2.0), 1e-12);
  EXPECT_NEAR(eb::conditional_entropy(eb::DensityOperator::maximally_mixed(6), 3, 2), std::log(3.0),
              1e-12);
  std::mt19937_64 gen(41);
  const auto a = eb::testing::random_density(gen, 3);
  const auto b = eb::testing::random_density(gen, 2);
  const auto joint = eb::make_density(CMatrix(Eigen::kroneckerProduct(b.matrix(), a.matrix())));
  EXPECT_NEAR(eb::conditional_entropy(joint, 3, 2), eb::von_neumann_entropy(a), 1e-10);
  EXPECT_THROW(eb::conditional_entropy(joint, 2, 2), eb::Error);
}

TEST(ConditionalEntropy, RangeOnRandomStates) {
  std::mt19937_64 gen(42);
  for (int trial = 0; trial < 100; ++trial) {
    const int da = 1 + trial % 4, db = 1 + (trial / 4) % 4;
    const auto rho = eb::testing::random_density(gen, da * db, 1 + trial % (da * db));
    const double h = eb::conditional_entropy(rho, da, db);
    EXPECT_GE(h, -std::log(double(std::min(da, db))) - 1e-10);
    EXPECT_LE(h, std::log(double(da)) + 1e-10);
  }
}

TEST(BinaryEntropy, Examples) {
  EXPECT_EQ(eb::binary_entropy(0.0), 0.0);
  EXPECT_EQ(eb::binary_entropy(1.0), 0.0);
  EXPECT_NEAR(eb::binary_entropy(0.5), std::log(2.0), 1e-15);
  EXPECT_NEAR(eb::binary_entropy(0.1), 0.3251, 1e-4);
  for (double x = 0.0; x <= 1.0; x += 0.01)
    EXPECT_NEAR(eb::binary_entropy(x), eb::binary_entropy(1 - x), 1e-15);
  EXPECT_THROW(eb::binary_entropy(1.5), eb::Error);
  EXPECT_THROW(eb::binary_entropy(-0.1), eb::Error);
}

TEST(Audenaert, Examples) {
  EXPECT_EQ(eb::audenaert_bound(0.0, 4), 0.0);
  EXPECT_EQ(eb::audenaert_bound(1.0, 2), 0.0);
  EXPECT_NEAR(eb::audenaert_bound(0.1, 4), 0.1 * std::log(3.0) + eb::binary_entropy(0.1), 1e-15);
  EXPECT_NEAR(eb::audenaert_bound(0.1, 4), 0.4350, 1e-4);
  EXPECT_THROW(eb::audenaert_bound(0.1, 1), eb::Error);
  EXPECT_THROW(eb::audenaert_bound(1.1, 3), eb::Error);
}

TEST(Audenaert, BoundsEntropyGapOnRandomPairs) {
  std::mt19937_64 gen(43);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + trial % 5;
    const auto rho = eb::testing::random_density(gen, d, 1 + trial % d);
    const auto sigma = eb::testing::random_density(gen, d);
    const double gap = std::abs(eb::von_neumann_entropy(rho) - eb::von_neumann_entropy(sigma));
    EXPECT_LE(gap, eb::audenaert_bound(eb::trace_distance(rho, sigma), d) + 1e-9);
  }
}

TEST(Winter, Examples) {
  EXPECT_EQ(eb::winter_bound(0.0, 2), 0.0);
  EXPECT_NEAR(eb::winter_bound(1.0, 2), 4 * std::log(2.0), 1e-14);
  const double expected = 0.2 * std::log(2.0) + 1.1 * eb::binary_entropy(1.0 / 11.0);
  EXPECT_NEAR(eb::winter_bound(0.1, 2), expected, 1e-15);
  // Independent scalar evaluation of the same expression.
  EXPECT_NEAR(eb::winter_bound(0.1, 2), 0.473729143196151, 1e-12);
  EXPECT_THROW(eb::winter_bound(-0.1, 2), eb::Error);
}

TEST(Lipschitz, X0MatchesLambertWOracle) {
  const auto& c = eb::lipschitz_constants();
  const double oracle = std::exp(2.0 + lambert_w0(-2.0 * std::exp(-2.0)));
  EXPECT_NEAR(c.x0, oracle, 1e-12);
  EXPECT_NEAR(c.x0, 4.922, 1e-3);
  EXPECT_LE(std::abs(std::log(c.x0) - 2.0 * (1.0 - 1.0 / c.x0)), 1e-12);
  EXPECT_NEAR(c.slope, 2.0 * std::log(c.x0) / c.x0, 0.0);
}

TEST(Lipschitz, Tangency) {
  const auto& c = eb::lipschitz_constants();
  const double l = std::log(c.x0);
  EXPECT_LE(std::abs(c.slope * (c.x0 - 1.0) - l * l), 1e-10);
  EXPECT_LE(std::abs(c.slope - 2.0 * l / c.x0), 1e-10);
}

TEST(Lipschitz, UValues) {
  EXPECT_EQ(eb::lipschitz_u(1), 0.0);
  EXPECT_NEAR(eb::lipschitz_u(2), 1.6094846850988238, 1e-12);
  EXPECT_NEAR(eb::lipschitz_u(2) * std::acos(std::sqrt(5.0 / 8.0)), 1.061, 1e-3);
  EXPECT_NEAR(eb::lipschitz_u(4), 2.0 * std::sqrt(3.0 * eb::lipschitz_constants().slope), 1e-14);
  for (int d = 5; d <= 64; ++d) EXPECT_EQ(eb::lipschitz_u(d), 2.0 * std::log(double(d)));
  EXPECT_NEAR(eb::lipschitz_u(8), 4.1589, 1e-4);
  EXPECT_THROW(eb::lipschitz_u(0), eb::Error);
}

TEST(Lipschitz, UNondecreasing) {
  for (int d = 1; d < 200; ++d) EXPECT_LE(eb::lipschitz_u(d), eb::lipschitz_u(d + 1));
}

TEST(Lipschitz, MajorantDominatesAndIsConcave) {
  const auto& c = eb::lipschitz_constants();
  double previous_slope = 1e300;
  const double h = 1e-3;
  for (double x = 1.0; x <= 100.0; x += h) {
    const double l = std::log(x);
    EXPECT_GE(c.majorant(x), l * l - 1e-12) << x;
    const double s = (c.majorant(x + h) - c.majorant(x)) / h;
    EXPECT_LE(s, previous_slope + 1e-9) << x;
    previous_slope = s;
  }
}

TEST(Bounds, ScalarExamples) {
  EXPECT_EQ(eb::sekatski_bound(0.0, 3), 0.0);
  EXPECT_NEAR(eb::sekatski_bound(0.1, 2), 0.16095, 1e-5);
  EXPECT_EQ(eb::sekatski_bound(0.3, 1), 0.0);

  EXPECT_NEAR(eb::naive_conditional_bound(0.2, 3, 1), eb::lipschitz_u(3) * 0.2, 1e-15);
  EXPECT_NEAR(eb::naive_conditional_bound(0.1, 2, 2), 0.4397, 1e-4);
  EXPECT_EQ(eb::naive_conditional_bound(0.0, 2, 2), 0.0);

  EXPECT_EQ(eb::qc_continuity_bound(0.0, 2), 0.0);
  EXPECT_NEAR(eb::qc_continuity_bound(std::acos(std::sqrt(5.0 / 8.0)), 2), 1.061, 1e-3);
  EXPECT_NEAR(eb::qc_continuity_bound(1e-6, 8), 2 * std::log(8.0) * 1e-6, 1e-20);
  EXPECT_THROW(eb::qc_continuity_bound(2.0, 2), eb::Error);
  EXPECT_THROW(eb::qc_continuity_bound(-0.1, 2), eb::Error);
}

TEST(Bounds, QcBelowNaive) {
  for (int da = 1; da <= 10; ++da)
    for (int db = 1; db <= 10; ++db)
      for (double a = 0.0; a <= kPi / 2; a += 0.05)
        EXPECT_LE(eb::qc_continuity_bound(a, da), eb::naive_conditional_bound(a, da, db));
}

TEST(HcOfVector, Examples) {
  RVector e = RVector::Zero(4);
  e(0) = 1;
  EXPECT_EQ(eb::hc_of_vector(e, 2, 2), 0.0);
  EXPECT_NEAR(eb::hc_of_vector(RVector::Constant(4, 0.5), 2, 2), std::log(2.0), 1e-15);

  RVector v(4);
  v << std::sqrt(0.6), std::sqrt(0.15), std::sqrt(0.125), std::sqrt(0.125);
  const eb::QCState s({{0.75, diag_density({0.2, 0.8})}, {0.25, diag_density({0.5, 0.5})}});
  EXPECT_NEAR(eb::hc_of_vector(v, 2, 2), eb::conditional_entropy(eb::qc_embed(s), 2, 2), 1e-12);
  EXPECT_THROW(eb::hc_of_vector(v, 3, 2), eb::Error);
}

TEST(HcOfVector, MatchesConditionalEntropyOfEmbedding) {
  std::mt19937_64 gen(44);
  for (int trial = 0; trial < 300; ++trial) {
    const int da = 1 + trial % 4, db = 1 + (trial / 4) % 4;
    const auto s = random_qc(gen, da, db);
    EXPECT_NEAR(eb::hc_of_vector(eb::sqrt_vector(s)),
                eb::conditional_entropy(eb::qc_embed(s), da, db), 1e-10);
  }
}

TEST(PathState, Invariants) {
  std::mt19937_64 gen(45);
  for (int trial = 0; trial < 100; ++trial) {
    const int da = 1 + trial % 4, db = 1 + (trial / 4) % 4;
    const eb::PathState path(eb::sqrt_vector(random_qc(gen, da, db)),
                             eb::sqrt_vector(random_qc(gen, da, db)));
    EXPECT_LE((path.v(0.0) - path.r().entries).cwiseAbs().maxCoeff(), 1e-10);
    if (path.theta0() > 0)
      EXPECT_LE((path.v(path.theta0()) - path.s().entries).cwiseAbs().maxCoeff(), 1e-10);
    for (int i = 1; i < 10; ++i) {
      const double t = path.theta0() * i / 10.0;
      EXPECT_NEAR(path.v(t).norm(), 1.0, 1e-10);
      if (path.theta0() > 0) {
        EXPECT_NEAR(path.w(t).norm(), 1.0, 1e-10);
        EXPECT_NEAR(path.v(t).dot(path.w(t)), 0.0, 1e-10);
      }
    }
  }
}

TEST(HcDerivative, RejectsEqualEndpoints) {
  const eb::QCState s({{1.0, diag_density({0.6, 0.4})}});
  const eb::PathState path(eb::sqrt_vector(s), eb::sqrt_vector(s));
  EXPECT_EQ(path.theta0(), 0.0);
  EXPECT_THROW(eb::hc_derivative(path, 0.0), eb::Error);
  EXPECT_THROW(eb::hc_derivative(path, 0.1), eb::Error);
}

TEST(HcDerivative, PureToMixedFiniteDifference) {
  const eb::PathState path(eb::sqrt_vector(eb::QCState({{1.0, diag_density({1, 0})}})),
                           eb::sqrt_vector(eb::QCState({{1.0, diag_density({0.5, 0.5})}})));
  const double t = path.theta0() / 2;
  const double h = 1e-6;
  const double fd =
      (eb::hc_of_vector(path.v(t + h), 2, 1) - eb::hc_of_vector(path.v(t - h), 2, 1)) / (2 * h);
  EXPECT_NEAR(eb::hc_derivative(path, t), fd, 1e-6);
}

TEST(HcDerivative, RandomPathsAgainstFiniteDifferenceAndBound) {
  std::mt19937_64 gen(46);
  const double h = 1e-6;
  for (int trial = 0; trial < 100; ++trial) {
    const int da = 1 + trial % 4, db = 1 + (trial / 4) % 4;
    if (da * db == 1) continue;  // a single point; no path
    // Pure conditionals sort to the same vector; redraw until the path has
    // room for the stencil.
    auto path = eb::PathState(eb::sqrt_vector(random_qc(gen, da, db)),
                              eb::sqrt_vector(random_qc(gen, da, db)));
    while (path.theta0() <= 4 * h) {
      path = eb::PathState(eb::sqrt_vector(random_qc(gen, da, db)),
                           eb::sqrt_vector(random_qc(gen, da, db)));
    }
    for (int i = 1; i <= 20; ++i) {
      const double t = path.theta0() * i / 21.0;
      const double analytic = eb::hc_derivative(path, t);
      const double fd =
          (eb::hc_of_vector(path.v(t + h), da, db) - eb::hc_of_vector(path.v(t - h), da, db)) /
          (2 * h);
      EXPECT_LE(std::abs(analytic - fd), 1e-5 * std::max(1.0, std::abs(analytic)));
      EXPECT_LE(std::abs(analytic), eb::lipschitz_u(da) + 1e-8);
    }
  }
}

TEST(ConvertBounds, Examples) {
  using D = eb::ConversionDirection;
  EXPECT_EQ(eb::convert_bounds(0.0, D::kAngleFromTrace, 2), 0.0);
  EXPECT_NEAR(eb::convert_bounds(0.02, D::kAngleFromTrace, 2), 0.3224, 1e-4);
  EXPECT_NEAR(eb::small_trace_conversion(0.02, 2), 0.3219, 1e-4);
  EXPECT_NEAR(eb::convert_bounds(kPi / 2, D::kTraceFromAngle, 2), 1.0, 1e-15);
  EXPECT_THROW(eb::convert_bounds(1.5, D::kAngleFromTrace, 2), eb::Error);
  EXPECT_THROW(eb::convert_bounds(2.0, D::kTraceFromAngle, 2), eb::Error);
}

TEST(QcContinuityBound, RandomQcPairs) {
  std::mt19937_64 gen(47);
  for (int trial = 0; trial < 1000; ++trial) {
    const int da = 1 + trial % 4, db = 1 + (trial / 4) % 4;
    const auto s1 = random_qc(gen, da, db);
    const auto s2 = random_qc(gen, da, db);
    const auto r1 = eb::qc_embed(s1), r2 = eb::qc_embed(s2);
    const double gap =
        std::abs(eb::conditional_entropy(r1, da, db) - eb::conditional_entropy(r2, da, db));
    EXPECT_LE(gap, eb::qc_continuity_bound(eb::angular_distance(r1, r2), da) + 1e-9);
  }
}
