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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace fwfl::cli {

/// Process exit codes shared by every command.
enum ExitCode : int {
  kSuccess = 0,      // success or affirmative answer
  kNegative = 1,     // negative answer (not CPE, not a member, ...)
  kHypothesis = 2,   // CPE hypothesis of the invoked result fails
  kInputError = 3,   // I/O, parse or validation error
};

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

struct ReproductionSummary {
  std::uint64_t seed = 0;
  double cpe_min_eigenvalue_order8 = 0.0;
  bool cpe_order8 = false;
  bool cpe_order12 = false;
  double absolute_error = 0.0;
  double relative_error = 0.0;
  double residual = 0.0;
  double literal_residual = 0.0;
};

/// Batch-reactor pipeline: data generation, CPE checks, data-driven
/// simulation with L_0 = 4 and four future steps, comparison against the
/// model. Writes its artifacts to out_dir when it is not empty.
ReproductionSummary reproduce_batch_reactor(std::uint64_t seed,
                                            const std::filesystem::path& out_dir);

}  // namespace fwfl::cli
