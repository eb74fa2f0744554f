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
#include "fwfl/spectral_dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "fwfl/errors.hpp"

namespace fwfl {

SpectralDataset::SpectralDataset(Eigen::VectorXd omegas,
                                 std::vector<SpectralExperiment> experiments)
    : omegas_(std::move(omegas)), experiments_(std::move(experiments)) {
  const Eigen::Index m = omegas_.size();
  if (m < 1) throw ArgumentError("dataset needs at least one frequency");
  if (experiments_.empty()) {
    throw ArgumentError("dataset needs at least one experiment");
  }
  for (Eigen::Index k = 0; k < m; ++k) {
    const double w = omegas_(k);
    if (!std::isfinite(w)) throw ArgumentError("non-finite frequency");
    if (w < 0.0) {
      throw ArgumentError(
          "negative frequency " + std::to_string(w) +
          ": store conj(V) at -w instead, since V(-w) = conj(V(w)) for real "
          "signals");
    }
    if (w >= std::numbers::pi) {
      throw ArgumentError("frequency " + std::to_string(w) +
                          " outside [0, pi)");
    }
  }

  const Eigen::Index nu = experiments_.front().U.rows();
  const Eigen::Index ny = experiments_.front().Y.rows();
  if (nu < 1 || ny < 1) {
    throw DimensionError("n_u and n_y must be at least 1");
  }
  for (const auto& e : experiments_) {
    if (e.U.rows() != nu || e.Y.rows() != ny || e.U.cols() != m ||
        e.Y.cols() != m) {
      throw DimensionError(
          "every experiment needs n_u x M input and n_y x M output samples");
    }
    if (!e.U.allFinite() || !e.Y.allFinite()) {
      throw ArgumentError("spectrum samples must be finite");
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) {
                     return omegas_(a) < omegas_(b);
                   });
  if (!std::is_sorted(order.begin(), order.end())) {
    Eigen::VectorXd sorted(m);
    for (Eigen::Index k = 0; k < m; ++k) sorted(k) = omegas_(order[k]);
    omegas_ = std::move(sorted);
    for (auto& e : experiments_) {
      Eigen::MatrixXcd u(nu, m);
      Eigen::MatrixXcd y(ny, m);
      for (Eigen::Index k = 0; k < m; ++k) {
        u.col(k) = e.U.col(order[k]);
        y.col(k) = e.Y.col(order[k]);
      }
      e.U = std::move(u);
      e.Y = std::move(y);
    }
  }
  for (Eigen::Index k = 1; k < m; ++k) {
    if (omegas_(k) == omegas_(k - 1)) {
      throw ArgumentError("duplicate frequency " + std::to_string(omegas_(k)) +
                          " in grid");
    }
  }
}

std::vector<Eigen::MatrixXcd> SpectralDataset::inputs() const {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(experiments_.size());
  for (const auto& e : experiments_) out.push_back(e.U);
  return out;
}

std::vector<Eigen::MatrixXcd> SpectralDataset::outputs() const {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(experiments_.size());
  for (const auto& e : experiments_) out.push_back(e.Y);
  return out;
}

}  // namespace fwfl
