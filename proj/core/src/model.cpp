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
#include "fwfl/model.hpp"

#include <string>
#include <utility>

#include "fwfl/errors.hpp"

namespace fwfl {
namespace {

std::string shape(const Eigen::MatrixXd& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

StateSpaceModel::StateSpaceModel(Eigen::MatrixXd a, Eigen::MatrixXd b,
                                 Eigen::MatrixXd c, Eigen::MatrixXd d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_.rows() < 1 || a_.rows() != a_.cols()) {
    throw DimensionError("A must be square and non-empty, got " + shape(a_));
  }
  if (b_.rows() != a_.rows() || b_.cols() < 1) {
    throw DimensionError("B must have n_x rows and n_u >= 1 columns, got " +
                         shape(b_));
  }
  if (c_.cols() != a_.rows() || c_.rows() < 1) {
    throw DimensionError("C must have n_y >= 1 rows and n_x columns, got " +
                         shape(c_));
  }
  if (d_.rows() != c_.rows() || d_.cols() != b_.cols()) {
    throw DimensionError("D must be n_y x n_u, got " + shape(d_));
  }
  if (!a_.allFinite() || !b_.allFinite() || !c_.allFinite() ||
      !d_.allFinite()) {
    throw ArgumentError("model matrices must be finite");
  }
}

StateSpaceModel::StateSpaceModel(Eigen::MatrixXd a, Eigen::MatrixXd b,
                                 Eigen::MatrixXd c)
    : StateSpaceModel(a, b, c, Eigen::MatrixXd::Zero(c.rows(), b.cols())) {}

TimeTrajectory::TimeTrajectory(Eigen::MatrixXd u, Eigen::MatrixXd y)
    : u_(std::move(u)), y_(std::move(y)) {
  if (u_.cols() != y_.cols()) {
    throw DimensionError("trajectory input and output lengths differ: " +
                         std::to_string(u_.cols()) + " vs " +
                         std::to_string(y_.cols()));
  }
  if (u_.cols() < 1) throw DimensionError("trajectory must be non-empty");
  if (!u_.allFinite() || !y_.allFinite()) {
    throw ArgumentError("trajectory entries must be finite");
  }
}

Eigen::VectorXd TimeTrajectory::stacked_u() const { return stack_samples(u_); }

Eigen::VectorXd TimeTrajectory::stacked_y() const { return stack_samples(y_); }

Eigen::VectorXd TimeTrajectory::stacked() const {
  Eigen::VectorXd out(u_.size() + y_.size());
  out << stacked_u(), stacked_y();
  return out;
}

TimeTrajectory TimeTrajectory::window(Eigen::Index first,
                                      Eigen::Index count) const {
  if (first < 0 || count < 1 || first + count > length()) {
    throw ArgumentError("trajectory window out of range");
  }
  return TimeTrajectory(u_.middleCols(first, count), y_.middleCols(first, count));
}

Eigen::VectorXd stack_samples(const Eigen::MatrixXd& samples) {
  return samples.reshaped();
}

Eigen::MatrixXd unstack_samples(const Eigen::VectorXd& stacked,
                                Eigen::Index n_v) {
  if (n_v < 1 || stacked.size() % n_v != 0) {
    throw DimensionError("stacked length is not a multiple of the sample size");
  }
  return stacked.reshaped(n_v, stacked.size() / n_v);
}

}  // namespace fwfl
