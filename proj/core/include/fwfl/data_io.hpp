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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fwfl/model.hpp"
#include "fwfl/spectral_dataset.hpp"

namespace fwfl {

/// M complex n_y x n_u frequency-response samples on a grid in [0, pi).
class FrfMeasurementSet {
 public:
  FrfMeasurementSet(Eigen::VectorXd omegas,
                    std::vector<Eigen::MatrixXcd> responses);

  const Eigen::VectorXd& omegas() const { return omegas_; }
  const std::vector<Eigen::MatrixXcd>& responses() const { return responses_; }
  Eigen::Index num_frequencies() const { return omegas_.size(); }
  Eigen::Index n_u() const { return responses_.front().cols(); }
  Eigen::Index n_y() const { return responses_.front().rows(); }

 private:
  Eigen::VectorXd omegas_;
  std::vector<Eigen::MatrixXcd> responses_;
};

/// One experiment per input direction: U^i_m = e_i, Y^i_m = G(e^{jw_m}) e_i.
SpectralDataset frf_to_datasets(const FrfMeasurementSet& frf);

/// Union of the frequency grids; the experiments of every part are appended
/// in order, with zeros wherever an experiment was not sampled.
SpectralDataset merge_datasets(std::span<const SpectralDataset> parts);

// Model files (JSON):
//   {"n_x":..,"n_u":..,"n_y":..,"A":[row-major],"B":[..],"C":[..],"D":[..]}
// D may be omitted (zero).
StateSpaceModel parse_model(std::istream& in);
StateSpaceModel read_model(const std::filesystem::path& path);
void write_model(std::ostream& out, const StateSpaceModel& model);
void write_model(const std::filesystem::path& path,
                 const StateSpaceModel& model);

// FRF files (CSV): omega,reG_1_1,imG_1_1,reG_1_2,imG_1_2,... with (r, c)
// in row-major order.
FrfMeasurementSet parse_frf(std::istream& in);
FrfMeasurementSet read_frf(const std::filesystem::path& path);
void write_frf(std::ostream& out, const FrfMeasurementSet& frf);
void write_frf(const std::filesystem::path& path, const FrfMeasurementSet& frf);

// Dataset experiment files (CSV):
//   omega,reU_1..reU_nu,imU_1..imU_nu,reY_1..reY_ny,imY_1..imY_ny
// A dataset is a manifest JSON {"n_u":..,"n_y":..,"experiments":[paths]}
// whose paths are relative to the manifest's directory.
SpectralDataset parse_experiment(std::istream& in, Eigen::Index n_u,
                                 Eigen::Index n_y);
void write_experiment(std::ostream& out, const Eigen::VectorXd& omegas,
                      const SpectralExperiment& experiment);
SpectralDataset read_dataset(const std::filesystem::path& manifest);
/// Writes the manifest plus <stem>_exp<i>.csv next to it.
void write_dataset(const std::filesystem::path& manifest,
                   const SpectralDataset& data);

// Trajectory files (CSV): k,u_1..u_nu,y_1..y_ny. Input-only files omit the
// y columns.
TimeTrajectory parse_trajectory(std::istream& in);
TimeTrajectory read_trajectory(const std::filesystem::path& path);
void write_trajectory(std::ostream& out, const TimeTrajectory& trajectory,
                      Eigen::Index first_index = 0);
void write_trajectory(const std::filesystem::path& path,
                      const TimeTrajectory& trajectory,
                      Eigen::Index first_index = 0);

/// Input samples (n_u x N) from a trajectory-layout file; y columns, if
/// any, are ignored.
Eigen::MatrixXd read_inputs(const std::filesystem::path& path);
void write_inputs(const std::filesystem::path& path, const Eigen::MatrixXd& u,
                  Eigen::Index first_index = 0);

/// 17 significant digits; round-trips every finite double.
std::string format_double(double value);

}  // namespace fwfl
