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

#include "fwfl/model.hpp"

namespace fwfl::examples {

/// Unstable batch reactor discretized with a 0.5 s step (D = 0).
inline StateSpaceModel batch_reactor() {
  Eigen::MatrixXd a(4, 4);
  Eigen::MatrixXd b(4, 2);
  Eigen::MatrixXd c(2, 4);
  // clang-format off
  a <<  2.622, 0.320,  1.834, -1.066,
       -0.238, 0.187, -0.136,  0.202,
        0.161, 0.789,  0.286,  0.606,
       -0.104, 0.764,  0.089,  0.736;
  b << 0.465, -1.550,
       1.314,  0.085,
       2.055, -0.673,
       2.023, -0.160;
  c << 1, 0, 1, -1,
       0, 1, 0,  0;
  // clang-format on
  return StateSpaceModel(a, b, c);
}

/// w_m = 0.1 (m + 1), m = 0..9.
inline Eigen::VectorXd batch_reactor_grid() {
  Eigen::VectorXd omegas(10);
  for (Eigen::Index m = 0; m < omegas.size(); ++m) {
    omegas(m) = 0.1 * static_cast<double>(m + 1);
  }
  return omegas;
}

}  // namespace fwfl::examples
