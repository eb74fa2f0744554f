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
#include "fwfl/time_domain.hpp"

#include <string>

#include "fwfl/errors.hpp"
#include "fwfl/linalg.hpp"

namespace fwfl {
namespace {

// [H_L(v^1) ... H_L(v^Q)]
Eigen::MatrixXd stacked_hankel(std::span<const Eigen::MatrixXd> sequences,
                               Eigen::Index depth) {
  const Eigen::Index width = sequences.front().cols() - depth + 1;
  Eigen::MatrixXd out(sequences.front().rows() * depth,
                      width * static_cast<Eigen::Index>(sequences.size()));
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    out.middleCols(static_cast<Eigen::Index>(i) * width, width) =
        hankel(sequences[i], depth).entries;
  }
  return out;
}

void check_sequences(std::span<const Eigen::MatrixXd> sequences) {
  if (sequences.empty()) throw ArgumentError("empty sequence collection");
  for (const auto& s : sequences) {
    if (s.rows() != sequences.front().rows() ||
        s.cols() != sequences.front().cols()) {
      throw DimensionError("sequences must share dimension and length");
    }
  }
}

}  // namespace

HankelMatrix hankel(const Eigen::MatrixXd& x, Eigen::Index depth) {
  const Eigen::Index n = x.cols();
  if (depth < 1 || depth > n) {
    throw ArgumentError("Hankel depth " + std::to_string(depth) +
                        " outside [1, " + std::to_string(n) + "]");
  }
  const Eigen::Index nv = x.rows();
  HankelMatrix h;
  h.depth = depth;
  h.source_length = n;
  h.entries.resize(nv * depth, n - depth + 1);
  for (Eigen::Index i = 0; i < depth; ++i) {
    h.entries.middleRows(i * nv, nv) = x.middleCols(i, n - depth + 1);
  }
  return h;
}

TdCpeResult td_cpe(std::span<const Eigen::MatrixXd> sequences,
                   Eigen::Index order, const Tolerances& tol) {
  check_sequences(sequences);
  TdCpeResult out;
  out.required_rank = sequences.front().rows() * order;
  out.rank = linalg::numerical_rank(stacked_hankel(sequences, order), tol);
  out.is_cpe = out.rank == out.required_rank;
  return out;
}

MembershipResult td_wfl_membership(std::span<const TimeTrajectory> data,
                                   const TimeTrajectory& candidate,
                                   Eigen::Index n_x_bound,
                                   const Tolerances& tol) {
  if (data.empty()) throw ArgumentError("no data trajectories");
  if (n_x_bound < 0) throw ArgumentError("n_x bound must be non-negative");
  const Eigen::Index depth = candidate.length();
  const Eigen::Index n = data.front().length();
  std::vector<Eigen::MatrixXd> inputs;
  std::vector<Eigen::MatrixXd> outputs;
  for (const auto& t : data) {
    if (t.length() != n || t.n_u() != candidate.n_u() ||
        t.n_y() != candidate.n_y()) {
      throw DimensionError(
          "data trajectories must share length and match the candidate's "
          "dimensions");
    }
    inputs.push_back(t.u());
    outputs.push_back(t.y());
  }
  if (depth > n) {
    throw ArgumentError("candidate length exceeds data length");
  }
  const Eigen::Index order = depth + n_x_bound;
  if (order > n) {
    throw CpeHypothesisError("CPE of order " + std::to_string(order) +
                             " needs data of length >= order, have " +
                             std::to_string(n));
  }
  const TdCpeResult cpe = td_cpe(inputs, order, tol);
  if (!cpe.is_cpe) {
    throw CpeHypothesisError("data inputs are not CPE of order " +
                             std::to_string(order) + " (rank " +
                             std::to_string(cpe.rank) + " of " +
                             std::to_string(cpe.required_rank) + ")");
  }

  const Eigen::MatrixXd hu = stacked_hankel(inputs, depth);
  const Eigen::MatrixXd hy = stacked_hankel(outputs, depth);
  Eigen::MatrixXd lhs(hu.rows() + hy.rows(), hu.cols());
  lhs << hu, hy;
  const auto solution = linalg::min_norm_solve(lhs, candidate.stacked(), tol);

  MembershipResult out;
  out.residual = solution.relative_residual;
  out.is_member = out.residual <= tol.membership;
  if (out.is_member) out.g = solution.x;
  return out;
}

}  // namespace fwfl
