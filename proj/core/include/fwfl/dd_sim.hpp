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

#include "fwfl/freq_domain.hpp"
#include "fwfl/spectral_dataset.hpp"
#include "fwfl/tolerances.hpp"

namespace fwfl {

/// Data-driven simulation from spectral data.
///
/// The initial window {u_ini, y_ini} (length L_0) pins the unknown initial
/// state; u_future (length L - L_0) is the input to be applied afterwards.
/// The simulator never estimates a state: it solves
///
///   [u_ini; u_future; y_ini] = [Gamma_L(U); Gamma_{L_0}(Y)] g
///
/// for the minimum-norm g and returns the last (L - L_0) n_y rows of
/// Gamma_L(Y) g.
struct SimulationProblem {
  SpectralDataset data;
  Eigen::MatrixXd u_ini;     // n_u x L_0
  Eigen::MatrixXd y_ini;     // n_y x L_0
  Eigen::MatrixXd u_future;  // n_u x (L - L_0), may have zero columns
  Eigen::Index n_x_bound = 0;

  Eigen::Index initial_length() const { return u_ini.cols(); }
  Eigen::Index total_length() const { return u_ini.cols() + u_future.cols(); }

  /// Throws DimensionError / ArgumentError when L_0 < n_x_bound or the
  /// sample dimensions disagree with the dataset.
  void validate() const;
};

/// The linear system solved by dd_simulate.
struct SimulationEquations {
  Eigen::MatrixXd lhs;         // [Gamma_L(U); Gamma_{L_0}(Y)]
  Eigen::VectorXd rhs;         // (u_ini, u_future, y_ini)
  Eigen::MatrixXd output_map;  // Gamma_L(Y)
};

SimulationEquations simulation_equations(const SimulationProblem& problem);

struct SimulationResult {
  Eigen::MatrixXd y_future;  // n_y x (L - L_0)
  /// Full reconstructed output window Gamma_L(Y) g, n_y x L.
  Eigen::MatrixXd y_window;
  Eigen::VectorXd g;         // length 2MQ
  double residual = 0.0;
  /// dim ker of the initial-condition matrix.
  Eigen::Index kernel_dimension = 0;
  /// rank of (future rows of Gamma_L(Y)) * ker. Zero means every
  /// solution g yields the same y_future.
  Eigen::Index kernel_effect_dimension = 0;
};

/// Throws CpeHypothesisError when the inputs are not CPE of order
/// L + n_x_bound and InconsistentTrajectoryError when the initial window is
/// not reproduced within the membership tolerance.
SimulationResult dd_simulate(const SimulationProblem& problem,
                             const Tolerances& tol = {});

}  // namespace fwfl
