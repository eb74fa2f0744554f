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

#include <Eigen/Core>

namespace fwfl {

/// Discrete-time LTI realization x+ = A x + B u, y = C x + D u.
class StateSpaceModel {
 public:
  /// Throws DimensionError unless A is square, B has n_x rows, C has n_x
  /// columns, D is n_y x n_u and every dimension is at least one.
  StateSpaceModel(Eigen::MatrixXd a, Eigen::MatrixXd b, Eigen::MatrixXd c,
                  Eigen::MatrixXd d);
  /// D = 0.
  StateSpaceModel(Eigen::MatrixXd a, Eigen::MatrixXd b, Eigen::MatrixXd c);

  const Eigen::MatrixXd& A() const { return a_; }
  const Eigen::MatrixXd& B() const { return b_; }
  const Eigen::MatrixXd& C() const { return c_; }
  const Eigen::MatrixXd& D() const { return d_; }

  Eigen::Index n_x() const { return a_.rows(); }
  Eigen::Index n_u() const { return b_.cols(); }
  Eigen::Index n_y() const { return c_.rows(); }

 private:
  Eigen::MatrixXd a_;
  Eigen::MatrixXd b_;
  Eigen::MatrixXd c_;
  Eigen::MatrixXd d_;
};

/// Paired real input/output samples. Column k of u (n_u x N) and y (n_y x N)
/// holds u_k and y_k.
class TimeTrajectory {
 public:
  /// Throws DimensionError on unequal lengths or N = 0, ArgumentError on
  /// non-finite entries.
  TimeTrajectory(Eigen::MatrixXd u, Eigen::MatrixXd y);

  const Eigen::MatrixXd& u() const { return u_; }
  const Eigen::MatrixXd& y() const { return y_; }

  Eigen::Index length() const { return u_.cols(); }
  Eigen::Index n_u() const { return u_.rows(); }
  Eigen::Index n_y() const { return y_.rows(); }

  /// (u_0, ..., u_{N-1}) as one column.
  Eigen::VectorXd stacked_u() const;
  /// (y_0, ..., y_{N-1}) as one column.
  Eigen::VectorXd stacked_y() const;
  /// (u_[0,N-1], y_[0,N-1])
  Eigen::VectorXd stacked() const;

  /// Samples k in [first, first + count).
  TimeTrajectory window(Eigen::Index first, Eigen::Index count) const;

 private:
  Eigen::MatrixXd u_;
  Eigen::MatrixXd y_;
};

/// Column-stacks a n_v x N sample matrix into (v_0, ..., v_{N-1}).
Eigen::VectorXd stack_samples(const Eigen::MatrixXd& samples);
/// Inverse of stack_samples.
Eigen::MatrixXd unstack_samples(const Eigen::VectorXd& stacked, Eigen::Index n_v);

}  // namespace fwfl
