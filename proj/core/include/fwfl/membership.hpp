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

/// Outcome of a trajectory-membership test against a data matrix.
struct MembershipResult {
  bool is_member = false;
  /// Minimum-norm coefficient vector; present only for members.
  std::optional<Eigen::VectorXd> g;
  /// ||Gamma g - b|| / max(||b||, 1) of the least-squares solution.
  double residual = 0.0;
};

}  // namespace fwfl
