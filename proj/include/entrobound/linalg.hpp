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

#include <complex>
#include <functional>
#include <utility>

#include <Eigen/Dense>

namespace entrobound {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Largest entry magnitude; the "infinity norm" used by every tolerance check.
double max_abs(const CMatrix& m);

// A square complex matrix that passed the Hermiticity check and was
// symmetrized to (m + m^dagger) / 2.
class HermitianMatrix {
 public:
  // Throws kNonHermitian when the residual exceeds tol::kHermitian relative to
  // the largest entry, kDimensionMismatch for non-square or empty input.
  static HermitianMatrix from(const CMatrix& m);
  static HermitianMatrix from_real_diagonal(const RVector& diag);
  static HermitianMatrix identity(Eigen::Index dim);
  // Averages with the adjoint without checking. Only for matrices that are
  // Hermitian by construction (products like X H X^dagger).
  static HermitianMatrix symmetrize(const CMatrix& m);

  Eigen::Index dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }

 private:
  explicit HermitianMatrix(CMatrix m) : m_(std::move(m)) {}
  CMatrix m_;
};

struct SpectralDecomposition {
  RVector values;   // ascending
  CMatrix vectors;  // columns, unitary

  CMatrix reconstruct() const;
  double min_value() const { return values(0); }
  double max_value() const { return values(values.size() - 1); }
};

SpectralDecomposition eig_hermitian(const HermitianMatrix& m);

// V f(diag) V^dagger. f must map reals to reals.
HermitianMatrix apply_spectral(const SpectralDecomposition& s,
                               const std::function<double(double)>& f);

// Clamps eigenvalues in [-tol::kPsd, 0) to zero; throws kNegativeEigenvalue
// below that.
RVector clamped_psd_values(const RVector& values);

HermitianMatrix mat_sqrt(const HermitianMatrix& m);

struct PositiveNegativeParts {
  HermitianMatrix positive;
  HermitianMatrix negative;
};

PositiveNegativeParts positive_negative_parts(const HermitianMatrix& m);

bool is_invertible(const SpectralDecomposition& s);

// A # B = A^{1/2} (A^{-1/2} B A^{-1/2})^{1/2} A^{1/2}.
HermitianMatrix geometric_mean(const HermitianMatrix& a, const HermitianMatrix& b);

// rho^{-1} # sigma. Satisfies M rho M = sigma.
HermitianMatrix m_operator(const HermitianMatrix& rho, const HermitianMatrix& sigma);

// Mixes both arguments with delta * I / d before taking m_operator. No
// delta -> 0 limit is taken here: the limit can fail to exist.
HermitianMatrix m_operator_perturbed(const HermitianMatrix& rho, const HermitianMatrix& sigma,
                                     double delta);

// (1 - delta) m + delta I / d.
HermitianMatrix depolarize(const HermitianMatrix& m, double delta);

}  // namespace entrobound
