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
#include <benchmark/benchmark.h>

#include "fwfl/batch_reactor.hpp"
#include "fwfl/fwfl.hpp"
#include "support/generators.hpp"

namespace {

fwfl::SpectralDataset batch_reactor_data() {
  return fwfl::testing::unit_direction_dataset(fwfl::examples::batch_reactor(),
                                               fwfl::examples::batch_reactor_grid());
}

// Random dataset with n_u = 2, Q = 2 and M frequencies.
fwfl::SpectralDataset random_data(Eigen::Index m) {
  fwfl::testing::Rng rng(static_cast<std::uint64_t>(m));
  const auto model = fwfl::testing::random_model(rng, 4, 2, 2);
  return fwfl::testing::random_dataset(rng, model, fwfl::testing::random_grid(rng, m), 2);
}

void BM_GammaStack(benchmark::State& state) {
  const auto data = random_data(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fwfl::gamma_stack(data, 8));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GammaStack)->RangeMultiplier(4)->Range(10, 640)->Complexity();

void BM_FdCpeCheck(benchmark::State& state) {
  const auto data = random_data(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fwfl::fd_cpe_check(data, 8));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FdCpeCheck)->RangeMultiplier(4)->Range(10, 640)->Complexity();

void BM_BatchReactorSimulation(benchmark::State& state) {
  const auto model = fwfl::examples::batch_reactor();
  fwfl::testing::Rng rng(0);
  const Eigen::MatrixXd u = rng.matrix(2, 8);
  const auto truth = fwfl::simulate_time(model, Eigen::VectorXd::Zero(4), u);
  const fwfl::SimulationProblem problem{batch_reactor_data(), u.leftCols(4),
                                        truth.y().leftCols(4), u.rightCols(4), 4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(fwfl::dd_simulate(problem));
  }
}
BENCHMARK(BM_BatchReactorSimulation);

}  // namespace

BENCHMARK_MAIN();
