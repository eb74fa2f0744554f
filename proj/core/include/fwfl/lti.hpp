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

#include "fwfl/model.hpp"
#include "fwfl/tolerances.hpp"

namespace fwfl {

/// Simulates the model from x0 over the input samples u (n_u x N).
/// y_k = C x_k + D u_k, x_{k+1} = A x_k + B u_k for k = 0..N-1.
TimeTrajectory simulate_time(const StateSpaceModel& model,
                             const Eigen::VectorXd& x0,
                             const Eigen::MatrixXd& u);

/// G(e^{jw}) = C (e^{jw} I - A)^{-1} B + D. Any finite w is accepted so that
/// negative frequencies can be evaluated when checking conjugate symmetry.
/// Throws SingularResolventError when e^{jw} is an eigenvalue of A.
Eigen::MatrixXcd evaluate_transfer(const StateSpaceModel& model, double omega,
                                   const Tolerances& tol = {});

struct SpectrumSample {
  Eigen::VectorXcd X;
  Eigen::VectorXcd Y;
};

/// State and output spectrum samples induced by the input sample U at w:
/// X = (e^{jw} I - A)^{-1} B U and Y = C X + D U.
SpectrumSample evaluate_spectrum(const StateSpaceModel& model, double omega,
                                 const Eigen::VectorXcd& U,
                                 const Tolerances& tol = {});

/// n_x - rank [B, AB, ..., A^{n_x-1} B]; zero means (A, B) is controllable.
Eigen::Index controllability_defect(const StateSpaceModel& model,
                                    const Tolerances& tol = {});

struct StackedMaps {
  /// Observability map O_L = (C, CA, ..., CA^{L-1}), L n_y x n_x.
  Eigen::MatrixXd observability;
  /// Block lower-triangular Toeplitz of Markov parameters D, CB, CAB, ...
  Eigen::MatrixXd toeplitz;
};

/// O_L and T_L with y_[0,L-1] = O_L x0 + T_L u_[0,L-1].
StackedMaps stacked_maps(const StateSpaceModel& model, Eigen::Index depth);

/// n_x - rank O_L.
Eigen::Index observability_defect(const StateSpaceModel& model,
                                  Eigen::Index depth,
                                  const Tolerances& tol = {});

}  // namespace fwfl
