/*
 Copyright 2026 The fwfl Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#pragma once

#include <Eigen/Dense>

#include "fwfl/tolerances.hpp"

namespace fwfl::linalg {

/// Number of singular values above the shared rank threshold.
Eigen::Index numerical_rank(const Eigen::MatrixXd& m,
                            const Tolerances& tol = {});
Eigen::Index numerical_rank(const Eigen::MatrixXcd& m,
                            const Tolerances& tol = {});

/// Result of a minimum-norm least-squares solve.
struct LeastSquaresSolution {
  Eigen::VectorXd x;
  /// ||A x - b|| / max(||b||, 1)
  double relative_residual = 0.0;
  Eigen::Index rank = 0;
};

/// Minimum-norm least-squares solution of A x = b (pseudoinverse semantics),
/// with singular values below the shared threshold truncated.
LeastSquaresSolution min_norm_solve(const Eigen::MatrixXd& a,
                                    const Eigen::VectorXd& b,
                                    const Tolerances& tol = {});

/// Orthonormal basis of the numerical null space of A (columns).
Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& a,
                             const Tolerances& tol = {});

/// Smallest eigenvalue of a symmetric matrix (0x0 -> +inf).
double min_eigenvalue(const Eigen::MatrixXd& symmetric);

/// ||r|| / max(||b||, 1)
double relative_residual(const Eigen::VectorXd& residual,
                         const Eigen::VectorXd& rhs);

}  // namespace fwfl::linalg
