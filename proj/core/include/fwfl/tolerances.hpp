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

#include <optional>

#include <Eigen/Core>

namespace fwfl {

/// Numerical thresholds shared by every rank, definiteness and membership
/// decision in the library.
struct Tolerances {
  /// Relative singular-value threshold: a singular value counts when it is
  /// larger than sigma_max * rank_relative. When unset, the per-matrix
  /// default max(rows, cols) * eps * 100 is used.
  std::optional<double> rank_relative;

  /// A symmetric matrix S is treated as positive definite when its minimum
  /// eigenvalue exceeds pd_relative * trace(S) / dim(S).
  double pd_relative = 1e-10;

  /// Membership: ||Gamma g - b|| / max(||b||, 1) must not exceed this.
  double membership = 1e-8;

  /// Relative factor applied to sigma_max for a rows x cols matrix.
  double rank_factor(Eigen::Index rows, Eigen::Index cols) const;

  /// Absolute singular-value threshold for a rows x cols matrix.
  double rank_threshold(double sigma_max, Eigen::Index rows,
                        Eigen::Index cols) const;

  /// Absolute eigenvalue threshold for a symmetric matrix.
  double pd_threshold(const Eigen::MatrixXd& symmetric) const;

  /// Reads FWFL_TOL_RANK, FWFL_TOL_PD and FWFL_TOL_MEMBERSHIP on top of
  /// the defaults. Unparseable values are ignored.
  static Tolerances from_environment();
};

}  // namespace fwfl
