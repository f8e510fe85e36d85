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

#include "entrobound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entrobound/error.hpp"
#include "entrobound/tolerances.hpp"

namespace entrobound {

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

HermitianMatrix HermitianMatrix::from(const CMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    std::ostringstream os;
    os << "expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    fail(ErrorCode::kDimensionMismatch, os.str());
  }
  const double scale = max_abs(m);
  const double residual = max_abs(m - m.adjoint());
  if (residual > tol::kHermitian * scale) {
    std::ostringstream os;
    os << "matrix is not Hermitian: residual " << residual << " vs scale " << scale;
    fail(ErrorCode::kNonHermitian, os.str());
  }
  return symmetrize(m);
}

HermitianMatrix HermitianMatrix::symmetrize(const CMatrix& m) {
  return HermitianMatrix(CMatrix(0.5 * (m + m.adjoint())));
}

HermitianMatrix HermitianMatrix::from_real_diagonal(const RVector& diag) {
  if (diag.size() == 0) fail(ErrorCode::kDimensionMismatch, "empty diagonal");
  return HermitianMatrix(diag.cast<Complex>().asDiagonal());
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index dim) {
  if (dim < 1) fail(ErrorCode::kDimensionMismatch, "identity dimension must be >= 1");
  return HermitianMatrix(CMatrix::Identity(dim, dim));
}

CMatrix SpectralDecomposition::reconstruct() const {
  return vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
}

SpectralDecomposition eig_hermitian(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m.matrix());
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::kNoConvergence, "Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

HermitianMatrix apply_spectral(const SpectralDecomposition& s,
                               const std::function<double(double)>& f) {
  RVector mapped = s.values.unaryExpr([&f](double x) { return f(x); });
  return HermitianMatrix::symmetrize(s.vectors * mapped.cast<Complex>().asDiagonal() *
                                     s.vectors.adjoint());
}

RVector clamped_psd_values(const RVector& values) {
  RVector out = values;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out(i) < -tol::kPsd) {
      std::ostringstream os;
      os << "negative eigenvalue " << out(i);
      fail(ErrorCode::kNegativeEigenvalue, os.str());
    }
    out(i) = std::max(out(i), 0.0);
  }
  return out;
}

namespace {

SpectralDecomposition clamped(SpectralDecomposition s) {
  s.values = clamped_psd_values(s.values);
  return s;
}

HermitianMatrix sqrt_of(const SpectralDecomposition& psd) {
  return apply_spectral(psd, [](double x) { return std::sqrt(x); });
}

void require_invertible(const SpectralDecomposition& s, const char* what) {
  if (!is_invertible(s)) {
    std::ostringstream os;
    os << what << " is not invertible: eigenvalues span [" << s.min_value() << ", " << s.max_value()
       << "]";
    fail(ErrorCode::kNotInvertible, os.str());
  }
}

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << "dimension mismatch: " << a.dim() << " vs " << b.dim();
    fail(ErrorCode::kDimensionMismatch, os.str());
  }
}

}  // namespace

HermitianMatrix mat_sqrt(const HermitianMatrix& m) { return sqrt_of(clamped(eig_hermitian(m))); }

PositiveNegativeParts positive_negative_parts(const HermitianMatrix& m) {
  const SpectralDecomposition s = eig_hermitian(m);
  HermitianMatrix positive = apply_spectral(s, [](double x) { return x > 0.0 ? x : 0.0; });
  HermitianMatrix negative = apply_spectral(s, [](double x) { return x < 0.0 ? -x : 0.0; });
  return {std::move(positive), std::move(negative)};
}

bool is_invertible(const SpectralDecomposition& s) {
  const double top = s.max_value();
  return top > 0.0 && s.min_value() > tol::kInvertibleRelative * top;
}

HermitianMatrix geometric_mean(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_same_dim(a, b);
  const SpectralDecomposition sa = eig_hermitian(a);
  require_invertible(sa, "left geometric-mean argument");
  clamped_psd_values(eig_hermitian(b).values);

  const CMatrix a_half = sqrt_of(sa).matrix();
  const CMatrix a_inv_half =
      apply_spectral(sa, [](double x) { return 1.0 / std::sqrt(x); }).matrix();
  const HermitianMatrix inner = HermitianMatrix::symmetrize(a_inv_half * b.matrix() * a_inv_half);
  const CMatrix root = mat_sqrt(inner).matrix();
  return HermitianMatrix::symmetrize(a_half * root * a_half);
}

HermitianMatrix m_operator(const HermitianMatrix& rho, const HermitianMatrix& sigma) {
  require_same_dim(rho, sigma);
  const SpectralDecomposition sr = eig_hermitian(rho);
  require_invertible(sr, "rho");
  // With A = rho^{-1}: A^{1/2} = rho^{-1/2} and A^{-1/2} = rho^{1/2}, so the
  // inverse never has to be formed explicitly.
  const CMatrix rho_half = sqrt_of(sr).matrix();
  const CMatrix rho_inv_half =
      apply_spectral(sr, [](double x) { return 1.0 / std::sqrt(x); }).matrix();
  const HermitianMatrix inner = HermitianMatrix::symmetrize(rho_half * sigma.matrix() * rho_half);
  const CMatrix root = mat_sqrt(inner).matrix();
  return HermitianMatrix::symmetrize(rho_inv_half * root * rho_inv_half);
}

HermitianMatrix depolarize(const HermitianMatrix& m, double delta) {
  const auto d = static_cast<double>(m.dim());
  CMatrix out = (1.0 - delta) * m.matrix();
  out.diagonal().array() += delta / d;
  return HermitianMatrix::symmetrize(out);
}

HermitianMatrix m_operator_perturbed(const HermitianMatrix& rho, const HermitianMatrix& sigma,
                                     double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    std::ostringstream os;
    os << "perturbation delta must lie in (0, 1), got " << delta;
    fail(ErrorCode::kInvalidDelta, os.str());
  }
  require_same_dim(rho, sigma);
  return m_operator(depolarize(rho, delta), depolarize(sigma, delta));
}

}  // namespace entrobound
