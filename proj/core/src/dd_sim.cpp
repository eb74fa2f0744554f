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
#include "fwfl/dd_sim.hpp"

#include <string>

#include <Eigen/SVD>

#include "fwfl/errors.hpp"
#include "fwfl/linalg.hpp"
#include "fwfl/model.hpp"

namespace fwfl {

void SimulationProblem::validate() const {
  const Eigen::Index l0 = initial_length();
  if (n_x_bound < 0) throw ArgumentError("n_x bound must be non-negative");
  if (l0 < 1 || l0 < n_x_bound) {
    throw ArgumentError("initial window length " + std::to_string(l0) +
                        " must be at least max(1, n_x bound = " +
                        std::to_string(n_x_bound) + ")");
  }
  if (y_ini.cols() != l0) {
    throw DimensionError("u_ini and y_ini lengths differ");
  }
  if (u_ini.rows() != data.n_u() || y_ini.rows() != data.n_y()) {
    throw DimensionError("initial window dimensions do not match the dataset");
  }
  if (u_future.cols() > 0 && u_future.rows() != data.n_u()) {
    throw DimensionError("future inputs do not match the dataset's n_u");
  }
  if (!u_ini.allFinite() || !y_ini.allFinite() || !u_future.allFinite()) {
    throw ArgumentError("simulation inputs must be finite");
  }
}

SimulationEquations simulation_equations(const SimulationProblem& problem) {
  problem.validate();
  const Eigen::Index l0 = problem.initial_length();
  const Eigen::Index ny = problem.data.n_y();
  const GammaStack stack = gamma_stack(problem.data, problem.total_length());

  SimulationEquations eq;
  eq.lhs.resize(stack.gamma_u.rows() + l0 * ny, stack.gamma_u.cols());
  eq.lhs << stack.gamma_u, stack.gamma_y.topRows(l0 * ny);

  const Eigen::Index future_inputs = problem.u_future.size();
  eq.rhs.resize(problem.u_ini.size() + future_inputs + problem.y_ini.size());
  eq.rhs.head(problem.u_ini.size()) = stack_samples(problem.u_ini);
  if (future_inputs > 0) {
    eq.rhs.segment(problem.u_ini.size(), future_inputs) =
        stack_samples(problem.u_future);
  }
  eq.rhs.tail(problem.y_ini.size()) = stack_samples(problem.y_ini);
  eq.output_map = stack.gamma_y;
  return eq;
}

SimulationResult dd_simulate(const SimulationProblem& problem,
                             const Tolerances& tol) {
  problem.validate();
  require_cpe(problem.data, problem.total_length() + problem.n_x_bound, tol);

  const SimulationEquations eq = simulation_equations(problem);
  const auto solution = linalg::min_norm_solve(eq.lhs, eq.rhs, tol);
  if (solution.relative_residual > tol.membership) {
    throw InconsistentTrajectoryError(
        solution.relative_residual,
        "initial trajectory is not consistent with the data (relative "
        "residual " +
            std::to_string(solution.relative_residual) + ")");
  }

  const Eigen::Index ny = problem.data.n_y();
  const Eigen::Index horizon = problem.u_future.cols();

  SimulationResult out;
  out.g = solution.x;
  out.residual = solution.relative_residual;
  out.y_window = unstack_samples(eq.output_map * solution.x, ny);
  out.y_future = out.y_window.rightCols(horizon);

  const Eigen::MatrixXd kernel = linalg::kernel_basis(eq.lhs, tol);
  out.kernel_dimension = kernel.cols();
  if (horizon > 0 && kernel.cols() > 0) {
    const Eigen::MatrixXd future_rows = eq.output_map.bottomRows(horizon * ny);
    const double scale = future_rows.norm();
    const Eigen::MatrixXd effect = future_rows * kernel;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(effect);
    const double threshold =
        tol.rank_threshold(scale, future_rows.rows(), future_rows.cols());
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
      if (svd.singularValues()(i) > threshold) ++out.kernel_effect_dimension;
    }
  }
  return out;
}

}  // namespace fwfl
