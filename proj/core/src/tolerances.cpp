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
#include "fwfl/tolerances.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace fwfl {
namespace {

std::optional<double> env_double(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0.0)) return std::nullopt;
  return value;
}

}  // namespace

double Tolerances::rank_factor(Eigen::Index rows, Eigen::Index cols) const {
  if (rank_relative) return *rank_relative;
  const auto size = static_cast<double>(std::max<Eigen::Index>({rows, cols, 1}));
  return size * std::numeric_limits<double>::epsilon() * 100.0;
}

double Tolerances::rank_threshold(double sigma_max, Eigen::Index rows,
                                  Eigen::Index cols) const {
  return sigma_max * rank_factor(rows, cols);
}

double Tolerances::pd_threshold(const Eigen::MatrixXd& symmetric) const {
  if (symmetric.rows() == 0) return 0.0;
  return pd_relative * symmetric.trace() /
         static_cast<double>(symmetric.rows());
}

Tolerances Tolerances::from_environment() {
  Tolerances tol;
  if (auto v = env_double("FWFL_TOL_RANK")) tol.rank_relative = *v;
  if (auto v = env_double("FWFL_TOL_PD")) tol.pd_relative = *v;
  if (auto v = env_double("FWFL_TOL_MEMBERSHIP")) tol.membership = *v;
  return tol;
}

}  // namespace fwfl
