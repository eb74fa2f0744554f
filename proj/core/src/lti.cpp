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
#include "fwfl/lti.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/LU>

#include "fwfl/errors.hpp"
#include "fwfl/linalg.hpp"

namespace fwfl {
namespace {

// LU of e^{jw} I - A, refusing (numerically) singular resolvents.
Eigen::FullPivLU<Eigen::MatrixXcd> resolvent_lu(const StateSpaceModel& model,
                                                double omega,
                                                const Tolerances& tol) {
  if (!std::isfinite(omega)) {
    throw ArgumentError("frequency must be finite");
  }
  const Eigen::Index n = model.n_x();
  const std::complex<double> z = std::polar(1.0, omega);
  Eigen::MatrixXcd resolvent =
      z * Eigen::MatrixXcd::Identity(n, n) - model.A().cast<std::complex<double>>();
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(resolvent);
  lu.setThreshold(tol.rank_factor(n, n));
  if (!lu.isInvertible()) {
    throw SingularResolventError(
        omega, "e^{jw} is an eigenvalue of A at w = " + std::to_string(omega));
  }
  return lu;
}

}  // namespace

TimeTrajectory simulate_time(const StateSpaceModel& model,
                             const Eigen::VectorXd& x0,
                             const Eigen::MatrixXd& u) {
  if (x0.size() != model.n_x()) {
    throw DimensionError("x0 has " + std::to_string(x0.size()) +
                         " entries, model has n_x = " +
                         std::to_string(model.n_x()));
  }
  if (u.rows() != model.n_u()) {
    throw DimensionError("input samples have " + std::to_string(u.rows()) +
                         " rows, model has n_u = " +
                         std::to_string(model.n_u()));
  }
  Eigen::MatrixXd y(model.n_y(), u.cols());
  Eigen::VectorXd x = x0;
  for (Eigen::Index k = 0; k < u.cols(); ++k) {
    y.col(k) = model.C() * x + model.D() * u.col(k);
    x = model.A() * x + model.B() * u.col(k);
  }
  return TimeTrajectory(u, y);
}

Eigen::MatrixXcd evaluate_transfer(const StateSpaceModel& model, double omega,
                                   const Tolerances& tol) {
  const auto lu = resolvent_lu(model, omega, tol);
  const Eigen::MatrixXcd x = lu.solve(model.B().cast<std::complex<double>>());
  return model.C().cast<std::complex<double>>() * x +
         model.D().cast<std::complex<double>>();
}

SpectrumSample evaluate_spectrum(const StateSpaceModel& model, double omega,
                                 const Eigen::VectorXcd& U,
                                 const Tolerances& tol) {
  if (U.size() != model.n_u()) {
    throw DimensionError("input spectrum sample has wrong dimension");
  }
  const auto lu = resolvent_lu(model, omega, tol);
  SpectrumSample out;
  out.X = lu.solve(model.B().cast<std::complex<double>>() * U);
  out.Y = model.C().cast<std::complex<double>>() * out.X +
          model.D().cast<std::complex<double>>() * U;
  return out;
}

Eigen::Index controllability_defect(const StateSpaceModel& model,
                                    const Tolerances& tol) {
  const Eigen::Index n = model.n_x();
  const Eigen::Index m = model.n_u();
  // [B AB ... A^{n-1} B]
  Eigen::MatrixXd ctrb(n, n * m);
  ctrb.leftCols(m) = model.B();
  for (Eigen::Index i = 1; i < n; ++i) {
    ctrb.middleCols(i * m, m) = model.A() * ctrb.middleCols((i - 1) * m, m);
  }
  return n - linalg::numerical_rank(ctrb, tol);
}

StackedMaps stacked_maps(const StateSpaceModel& model, Eigen::Index depth) {
  if (depth < 1) throw ArgumentError("depth must be at least 1");
  const Eigen::Index nx = model.n_x();
  const Eigen::Index nu = model.n_u();
  const Eigen::Index ny = model.n_y();

  StackedMaps maps;
  maps.observability.resize(depth * ny, nx);
  maps.observability.topRows(ny) = model.C();
  for (Eigen::Index k = 1; k < depth; ++k) {
    maps.observability.middleRows(k * ny, ny) =
        maps.observability.middleRows((k - 1) * ny, ny) * model.A();
  }

  // markov[k] = D for k = 0, C A^{k-1} B otherwise.
  std::vector<Eigen::MatrixXd> markov(depth);
  markov[0] = model.D();
  for (Eigen::Index k = 1; k < depth; ++k) {
    markov[k] = maps.observability.middleRows((k - 1) * ny, ny) * model.B();
  }
  maps.toeplitz = Eigen::MatrixXd::Zero(depth * ny, depth * nu);
  for (Eigen::Index row = 0; row < depth; ++row) {
    for (Eigen::Index col = 0; col <= row; ++col) {
      maps.toeplitz.block(row * ny, col * nu, ny, nu) = markov[row - col];
    }
  }
  return maps;
}

Eigen::Index observability_defect(const StateSpaceModel& model,
                                  Eigen::Index depth, const Tolerances& tol) {
  return model.n_x() -
         linalg::numerical_rank(stacked_maps(model, depth).observability, tol);
}

}  // namespace fwfl
