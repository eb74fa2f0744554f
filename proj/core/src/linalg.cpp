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
#include "fwfl/linalg.hpp"

#include <limits>

#include <Eigen/SVD>

namespace fwfl::linalg {
namespace {

template <typename Matrix>
Eigen::Index rank_of(const Matrix& m, const Tolerances& tol) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  const double threshold = tol.rank_threshold(s(0), m.rows(), m.cols());
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > threshold) ++rank;
  }
  return rank;
}

}  // namespace

Eigen::Index numerical_rank(const Eigen::MatrixXd& m, const Tolerances& tol) {
  return rank_of(m, tol);
}

Eigen::Index numerical_rank(const Eigen::MatrixXcd& m, const Tolerances& tol) {
  return rank_of(m, tol);
}

double relative_residual(const Eigen::VectorXd& residual,
                         const Eigen::VectorXd& rhs) {
  return residual.norm() / std::max(rhs.norm(), 1.0);
}

LeastSquaresSolution min_norm_solve(const Eigen::MatrixXd& a,
                                    const Eigen::VectorXd& b,
                                    const Tolerances& tol) {
  LeastSquaresSolution out;
  out.x = Eigen::VectorXd::Zero(a.cols());
  if (a.size() == 0) {
    out.relative_residual = relative_residual(b, b);
    return out;
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU |
                                            Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double threshold = tol.rank_threshold(s(0), a.rows(), a.cols());
  Eigen::VectorXd coeffs = svd.matrixU().transpose() * b;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > threshold) {
      coeffs(i) /= s(i);
      ++out.rank;
    } else {
      coeffs(i) = 0.0;
    }
  }
  out.x = svd.matrixV() * coeffs;
  out.relative_residual = relative_residual(a * out.x - b, b);
  return out;
}

Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& a, const Tolerances& tol) {
  if (a.cols() == 0) return Eigen::MatrixXd(0, 0);
  if (a.rows() == 0) return Eigen::MatrixXd::Identity(a.cols(), a.cols());
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double threshold = tol.rank_threshold(s(0), a.rows(), a.cols());
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > threshold) ++rank;
  }
  return svd.matrixV().rightCols(a.cols() - rank);
}

double min_eigenvalue(const Eigen::MatrixXd& symmetric) {
  if (symmetric.rows() == 0) return std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(symmetric,
                                                     Eigen::EigenvaluesOnly);
  return eig.eigenvalues()(0);
}

}  // namespace fwfl::linalg
