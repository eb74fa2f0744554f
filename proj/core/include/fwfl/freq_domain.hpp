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
#include <vector>

#include <Eigen/Core>

#include "fwfl/membership.hpp"
#include "fwfl/model.hpp"
#include "fwfl/spectral_dataset.hpp"
#include "fwfl/tolerances.hpp"

namespace fwfl {

/// (1, e^{jw}, ..., e^{jw(L-1)}). Throws ArgumentError for depth < 1.
Eigen::VectorXcd w_vector(double omega, Eigen::Index depth);

/// Frequency-domain analogue of a Hankel matrix: column m is
/// W_L(w_m) kron V_m. samples is n_v x M, one column per frequency.
Eigen::MatrixXcd f_matrix(const Eigen::MatrixXcd& samples,
                          const Eigen::VectorXd& omegas, Eigen::Index depth);

/// Re sum_m W_L(w_m) W_L(w_m)^H kron sum_i V^i_m (V^i_m)^H, symmetrized.
/// Equals 1/2 [F F*] [F F*]^H for the conjugate-extended data matrix.
Eigen::MatrixXd cpe_gram(std::span<const Eigen::MatrixXcd> sequences,
                         const Eigen::VectorXd& omegas, Eigen::Index order);

/// cpe_gram over the input samples of a dataset.
Eigen::MatrixXd fd_cpe_gram(const SpectralDataset& data, Eigen::Index order);

/// [F_L(V^1) ... F_L(V^Q) conj(F_L(V^1)) ... conj(F_L(V^Q))], the matrix
/// whose full row rank defines frequency-domain CPE.
Eigen::MatrixXcd conjugate_extended_matrix(
    std::span<const Eigen::MatrixXcd> sequences, const Eigen::VectorXd& omegas,
    Eigen::Index order);

struct FdCpeReport {
  /// Decision: full row rank of the conjugate-extended matrix.
  bool is_cpe = false;
  Eigen::Index rank = 0;
  /// n_v L
  Eigen::Index required_rank = 0;

  /// Gram route: smallest eigenvalue and the tau_pd it is compared with.
  double min_eigenvalue = 0.0;
  double pd_threshold = 0.0;
  bool gram_positive_definite = false;

  /// Column count 2MQ and whether 2MQ >= n_v L.
  Eigen::Index columns = 0;
  bool counting_feasible = false;
  /// Q (2M - #{w_m = 0}): a zero frequency contributes at most Q.
  Eigen::Index attainable_rank = 0;
};

FdCpeReport cpe_check(std::span<const Eigen::MatrixXcd> sequences,
                      const Eigen::VectorXd& omegas, Eigen::Index order,
                      const Tolerances& tol = {});

/// CPE check of the dataset's input samples.
FdCpeReport fd_cpe_check(const SpectralDataset& data, Eigen::Index order,
                         const Tolerances& tol = {});

/// Re sum_{m,i} [X^i_m; W_L kron U^i_m] (.)^H with X^i_m computed from the
/// true model. Positive definite under CPE of order L + n_x for controllable
/// models. Needs the model, so this is an oracle-side quantity.
Eigen::MatrixXd lambda_matrix(const StateSpaceModel& model,
                              const SpectralDataset& data, Eigen::Index depth,
                              const Tolerances& tol = {});

/// Where a column of the Gamma stack comes from.
struct GammaColumn {
  enum class Part { Real, Imag };
  Eigen::Index experiment = 0;
  Eigen::Index frequency = 0;
  Part part = Part::Real;
};

struct GammaOptions {
  /// Drop columns that are zero in both gamma_u and gamma_y (zero-filled
  /// samples, imaginary parts at w = 0 with real samples).
  bool prune_zero_columns = false;
};

/// Real data matrices of the frequency-domain fundamental lemma:
/// [Re F_L(V^1) ... Re F_L(V^Q)  Im F_L(V^1) ... Im F_L(V^Q)] for inputs
/// and outputs. Without pruning the column count is 2MQ and column
/// c = p MQ + i M + m holds part p of experiment i at frequency m.
struct GammaStack {
  Eigen::MatrixXd gamma_u;
  Eigen::MatrixXd gamma_y;
  Eigen::Index depth = 0;
  std::vector<GammaColumn> column_map;
  /// 2MQ, regardless of pruning.
  Eigen::Index full_columns = 0;
  Eigen::Index num_frequencies = 0;
  Eigen::Index num_experiments = 0;

  /// Index of a column in the unpruned 2MQ layout.
  Eigen::Index full_index(const GammaColumn& column) const;
  /// Scatters a coefficient vector over the (possibly pruned) columns into
  /// the 2MQ layout, with zeros for pruned columns.
  Eigen::VectorXd expand(const Eigen::VectorXd& g) const;
};

GammaStack gamma_stack(const SpectralDataset& data, Eigen::Index depth,
                       const GammaOptions& options = {});

/// Complex coefficients G-bar from the real parameterization
/// g = (Re G-bar, -Im G-bar); g has length 2MQ.
Eigen::VectorXcd complex_coefficients(const Eigen::VectorXd& g);
/// Inverse of complex_coefficients.
Eigen::VectorXd real_coefficients(const Eigen::VectorXcd& g_bar);

/// Decides whether candidate (length L) is a trajectory of the system that
/// generated the spectra. Throws CpeHypothesisError when the inputs are not
/// CPE of order L + n_x_bound.
MembershipResult fd_wfl_membership(const SpectralDataset& data,
                                   const TimeTrajectory& candidate,
                                   Eigen::Index n_x_bound,
                                   const Tolerances& tol = {},
                                   const GammaOptions& options = {});

/// Throws CpeHypothesisError with the counting bounds when the dataset's
/// inputs are not CPE of the given order.
void require_cpe(const SpectralDataset& data, Eigen::Index order,
                 const Tolerances& tol = {});

}  // namespace fwfl
