// Copyright 2026 The tiltalloc Authors
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

#include <Eigen/SVD>

#include "tiltalloc/types.hpp"

namespace tiltalloc {

// Relative singular-value threshold below which a wide matrix is treated as
// row-rank deficient, and the damping used in that case.
inline constexpr double kRankTolerance = 1e-9;
inline constexpr double kPinvDamping = 1e-6;

template <int Rows, int Cols>
struct PinvResult {
  Eigen::Matrix<double, Cols, Rows> pinv;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  bool damped = false;
};

// Conditioning below which the Gram fast path hands over to the SVD,
// comfortably above kRankTolerance so the rank decision is always made at
// SVD precision.
inline constexpr double kGramPathThreshold = 1e-4;

/// Right pseudo-inverse M^T (M M^T)^-1 of a full-row-rank wide matrix.
/// When sigma_min < kRankTolerance * sigma_max the damped form
/// M^T (M M^T + lambda^2 I)^-1 with lambda = kPinvDamping is returned and
/// the result is flagged.
///
/// Well-conditioned inputs (sigma_min >= 1e-4 sigma_max) are handled
/// through an eigendecomposition of the small Gram matrix M M^T, which is
/// several times faster than the SVD and loses no accuracy at that
/// conditioning; anything near the rank threshold falls back to the SVD.
template <int Rows, int Cols>
PinvResult<Rows, Cols> right_pseudoinverse(
    const Eigen::Matrix<double, Rows, Cols>& m) {
  static_assert(Rows <= Cols, "expected a wide matrix");
  PinvResult<Rows, Cols> result;

  const Eigen::Matrix<double, Rows, Rows> gram = m * m.transpose();
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, Rows, Rows>> eig(gram);
  const auto& lambda = eig.eigenvalues();  // ascending
  if (lambda[0] >= kGramPathThreshold * kGramPathThreshold * lambda[Rows - 1] &&
      lambda[Rows - 1] > 0.0) {
    result.sigma_min = std::sqrt(lambda[0]);
    result.sigma_max = std::sqrt(lambda[Rows - 1]);
    result.damped = false;
    Eigen::Matrix<double, Rows, 1> inv_lambda;
    for (int k = 0; k < Rows; ++k) inv_lambda[k] = 1.0 / lambda[k];
    result.pinv = m.transpose() * (eig.eigenvectors() * inv_lambda.asDiagonal() *
                                   eig.eigenvectors().transpose());
    return result;
  }

  Eigen::JacobiSVD<Eigen::Matrix<double, Rows, Cols>> svd(
      m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();
  result.sigma_max = sigma[0];
  result.sigma_min = sigma[Rows - 1];
  result.damped = sigma[0] == 0.0 ||
                  result.sigma_min < kRankTolerance * result.sigma_max;

  Eigen::Matrix<double, Rows, 1> inv_sigma;
  for (int k = 0; k < Rows; ++k) {
    if (result.damped) {
      inv_sigma[k] = sigma[k] / (sigma[k] * sigma[k] + kPinvDamping * kPinvDamping);
    } else {
      inv_sigma[k] = 1.0 / sigma[k];
    }
  }
  result.pinv = svd.matrixV() * inv_sigma.asDiagonal() * svd.matrixU().transpose();
  return result;
}

/// Projector onto the null space of M: P = I - M^+ M. Symmetric and
/// idempotent with M P v = 0 for full-row-rank M; inherits the damped
/// fallback near rank deficiency.
template <int Rows, int Cols>
Eigen::Matrix<double, Cols, Cols> null_projector(
    const Eigen::Matrix<double, Rows, Cols>& m) {
  const auto pinv = right_pseudoinverse(m);
  return Eigen::Matrix<double, Cols, Cols>::Identity() - pinv.pinv * m;
}

}  // namespace tiltalloc
