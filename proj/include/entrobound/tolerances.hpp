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

// Numerical tolerances shared across modules. Values are absolute unless the
// name says otherwise.
namespace entrobound::tol {

// Hermiticity residual, relative to the largest entry magnitude.
inline constexpr double kHermitian = 1e-10;
// Eigenvalues in [-kPsd, 0) are rounding noise and clamp to zero.
inline constexpr double kPsd = 1e-10;
inline constexpr double kTrace = 1e-9;
// min eigenvalue > kInvertibleRelative * max eigenvalue.
inline constexpr double kInvertibleRelative = 1e-12;
// Eigenvalues at or below this fraction of the largest one are treated as
// outside the numerical support when compressing for fidelity.
inline constexpr double kSupportRelative = 1e-14;
inline constexpr double kOrthonormal = 1e-10;
inline constexpr double kDistribution = 1e-9;
inline constexpr double kUnitNorm = 1e-9;
inline constexpr double kSpectralCluster = 1e-7;
inline constexpr double kCommutator = 1e-8;
inline constexpr double kKernel = 1e-8;
inline constexpr double kEigenvectorResidual = 1e-8;
inline constexpr double kSaturationGap = 1e-8;
inline constexpr double kEqualStates = 1e-8;
inline constexpr double kPhase = 1e-7;
inline constexpr double kOverlapZero = 1e-12;

}  // namespace entrobound::tol
