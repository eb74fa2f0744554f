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

#include <vector>

#include <Eigen/Core>

namespace fwfl {

/// Samples of one input-output spectrum pair. Column m of U (n_u x M) and
/// Y (n_y x M) belong to the m-th frequency of the owning dataset.
struct SpectralExperiment {
  Eigen::MatrixXcd U;
  Eigen::MatrixXcd Y;
};

/// Q experiments sampled on a shared grid of M frequencies in [0, pi).
///
/// The constructor sorts the grid (permuting every experiment's columns
/// accordingly) and rejects duplicates, out-of-range or non-finite
/// frequencies, non-finite samples and inconsistent dimensions. Negative
/// frequencies are rejected: a real signal's spectrum satisfies
/// V(-w) = conj(V(w)), so conjugate such samples and store them at -w.
class SpectralDataset {
 public:
  SpectralDataset(Eigen::VectorXd omegas,
                  std::vector<SpectralExperiment> experiments);

  const Eigen::VectorXd& omegas() const { return omegas_; }
  const std::vector<SpectralExperiment>& experiments() const {
    return experiments_;
  }
  const SpectralExperiment& experiment(std::size_t i) const {
    return experiments_.at(i);
  }

  Eigen::Index num_frequencies() const { return omegas_.size(); }
  Eigen::Index num_experiments() const {
    return static_cast<Eigen::Index>(experiments_.size());
  }
  Eigen::Index n_u() const { return experiments_.front().U.rows(); }
  Eigen::Index n_y() const { return experiments_.front().Y.rows(); }

  /// Input samples of every experiment, in experiment order.
  std::vector<Eigen::MatrixXcd> inputs() const;
  /// Output samples of every experiment, in experiment order.
  std::vector<Eigen::MatrixXcd> outputs() const;

 private:
  Eigen::VectorXd omegas_;
  std::vector<SpectralExperiment> experiments_;
};

}  // namespace fwfl
