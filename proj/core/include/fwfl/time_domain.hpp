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

#include <span>

#include <Eigen/Core>

#include "fwfl/membership.hpp"
#include "fwfl/model.hpp"
#include "fwfl/tolerances.hpp"

namespace fwfl {

/// Depth-L block Hankel matrix of a sequence; block (i, j) is x_{i+j}.
struct HankelMatrix {
  Eigen::MatrixXd entries;  // (n_v L) x (N - L + 1)
  Eigen::Index depth = 0;
  Eigen::Index source_length = 0;
};

/// x is n_v x N with one sample per column. Throws ArgumentError unless
/// 1 <= depth <= N.
HankelMatrix hankel(const Eigen::MatrixXd& x, Eigen::Index depth);

struct TdCpeResult {
  bool is_cpe = false;
  Eigen::Index rank = 0;
  /// n_v L
  Eigen::Index required_rank = 0;
};

/// Rank test on [H_L(v^1) ... H_L(v^Q)]. All sequences must share n_v and N.
TdCpeResult td_cpe(std::span<const Eigen::MatrixXd> sequences,
                   Eigen::Index order, const Tolerances& tol = {});

/// Decides whether candidate (length L) is a trajectory of the system that
/// generated the Q equal-length data trajectories, via the stacked Hankel
/// representation. Throws CpeHypothesisError when the data inputs are not
/// CPE of order L + n_x_bound.
MembershipResult td_wfl_membership(std::span<const TimeTrajectory> data,
                                   const TimeTrajectory& candidate,
                                   Eigen::Index n_x_bound,
                                   const Tolerances& tol = {});

}  // namespace fwfl
