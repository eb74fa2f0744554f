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
#include "cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fwfl/batch_reactor.hpp"
#include "fwfl/data_io.hpp"
#include "fwfl/lti.hpp"
#include "support/generators.hpp"

namespace fwfl::cli {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("fwfl_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    write_model(dir_ / "br.json", examples::batch_reactor());
  }
  void TearDown() override { fs::remove_all(dir_); }

  int call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void make_batch_reactor_data() {
    ASSERT_EQ(call({"gen-data", path("br.json"), "--grid", "10", "0.1", "0.1",
                    "--excitation", "unit-directions", "-o", path("data.json")}),
              kSuccess)
        << err_.str();
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(Cli, GenDataWritesBatchReactorSpectra) {
  make_batch_reactor_data();
  const auto data = read_dataset(dir_ / "data.json");
  EXPECT_EQ(data.num_frequencies(), 10);
  EXPECT_EQ(data.num_experiments(), 2);
  EXPECT_NEAR(data.omegas()(0), 0.1, 1e-15);
  EXPECT_NEAR(data.omegas()(9), 1.0, 1e-15);
  const auto direct = testing::unit_direction_dataset(examples::batch_reactor(),
                                                      data.omegas());
  EXPECT_LE((data.experiment(1).Y - direct.experiment(1).Y).norm(), 1e-12);
}

TEST_F(Cli, GenDataEmptyGridAndSingularResolvent) {
  EXPECT_EQ(call({"gen-data", path("br.json"), "--grid", "0", "0.1", "0.1", "-o",
                  path("d.json")}),
            kInputError);
  write_model(dir_ / "int.json",
              StateSpaceModel(Eigen::MatrixXd::Ones(1, 1), Eigen::MatrixXd::Ones(1, 1),
                              Eigen::MatrixXd::Ones(1, 1)));
  EXPECT_EQ(call({"gen-data", path("int.json"), "--omegas", "0,0.5", "-o",
                  path("d.json")}),
            kInputError);
  EXPECT_NE(err_.str().find("omega"), std::string::npos);
}

TEST_F(Cli, GenDataUnitDelayFrf) {
  write_model(dir_ / "delay.json",
              StateSpaceModel(Eigen::MatrixXd::Zero(1, 1), Eigen::MatrixXd::Ones(1, 1),
                              Eigen::MatrixXd::Ones(1, 1)));
  ASSERT_EQ(call({"gen-data", path("delay.json"), "--omegas", "0.5", "-o",
                  path("d.json"), "--frf-out", path("frf.csv")}),
            kSuccess);
  const auto frf = read_frf(dir_ / "frf.csv");
  EXPECT_LE(std::abs(frf.responses()[0](0, 0) - std::polar(1.0, -0.5)), 1e-15);
}

TEST_F(Cli, CheckPeFrequencyDomain) {
  make_batch_reactor_data();
  EXPECT_EQ(call({"check-pe", path("data.json"), "--order", "8"}), kSuccess);
  EXPECT_NE(out_.str().find("is_cpe: true"), std::string::npos);
  EXPECT_NE(out_.str().find("rank: 16 / 16"), std::string::npos);

  EXPECT_EQ(call({"check-pe", path("data.json"), "--order", "21"}), kNegative);
  EXPECT_NE(out_.str().find("2MQ = 40 < L*n_u = 42"), std::string::npos);

  EXPECT_EQ(call({"check-pe", path("data.json"), "--order", "12"}), kSuccess);
  EXPECT_NE(out_.str().find("gram_positive_definite: false"), std::string::npos);

  EXPECT_EQ(call({"check-pe", path("missing.json"), "--order", "2"}), kInputError);
  EXPECT_EQ(call({"check-pe", path("data.json"), "--order", "0"}), kInputError);
}

TEST_F(Cli, CheckPeTimeDomain) {
  testing::Rng rng(1);
  write_inputs(dir_ / "u.csv", rng.matrix(2, 30));
  EXPECT_EQ(call({"check-pe", path("u.csv"), "--order", "5", "--domain", "time"}),
            kSuccess);
  EXPECT_NE(out_.str().find("rank_deficiency: 0"), std::string::npos);
  EXPECT_EQ(call({"check-pe", path("u.csv"), "--order", "16", "--domain", "time"}),
            kNegative);
}

TEST_F(Cli, MembershipExitCodes) {
  make_batch_reactor_data();
  testing::Rng rng(2);
  const auto model = examples::batch_reactor();
  const auto member = simulate_time(model, rng.vector(4), rng.matrix(2, 4));
  write_trajectory(dir_ / "member.csv", member);
  EXPECT_EQ(call({"membership", path("data.json"), path("member.csv"), "--nx-bound", "4",
                  "--g-out", path("g.csv")}),
            kSuccess)
      << err_.str();
  EXPECT_TRUE(fs::exists(dir_ / "g.csv"));

  write_trajectory(dir_ / "flipped.csv", TimeTrajectory(member.u(), -member.y()));
  EXPECT_EQ(call({"membership", path("data.json"), path("flipped.csv"), "--nx-bound",
                  "4"}),
            kNegative);

  const auto longer = simulate_time(model, rng.vector(4), rng.matrix(2, 17));
  write_trajectory(dir_ / "long.csv", longer);
  EXPECT_EQ(call({"membership", path("data.json"), path("long.csv"), "--nx-bound", "4"}),
            kHypothesis);
}

TEST_F(Cli, SimulateWritesTrajectoryAndDiagnostics) {
  make_batch_reactor_data();
  testing::Rng rng(3);
  const auto model = examples::batch_reactor();
  const Eigen::MatrixXd u = rng.matrix(2, 8);
  const auto truth = simulate_time(model, rng.vector(4), u);
  write_trajectory(dir_ / "ini.csv", truth.window(0, 4));
  write_inputs(dir_ / "fut.csv", u.rightCols(4), 4);
  ASSERT_EQ(call({"simulate", path("data.json"), "--initial", path("ini.csv"),
                  "--future-input", path("fut.csv"), "--nx-bound", "4", "-o",
                  path("sim.csv"), "--diagnostics", path("diag.json")}),
            kSuccess)
      << err_.str();
  const auto sim = read_trajectory(dir_ / "sim.csv");
  EXPECT_EQ(sim.u(), u.rightCols(4));
  EXPECT_LE((sim.y() - truth.y().rightCols(4)).norm(), 1e-6);
  EXPECT_TRUE(fs::exists(dir_ / "diag.json"));

  Eigen::MatrixXd y = truth.y().leftCols(4);
  y(0, 0) += 1.0;
  write_trajectory(dir_ / "bad.csv", TimeTrajectory(u.leftCols(4), y));
  EXPECT_EQ(call({"simulate", path("data.json"), "--initial", path("bad.csv"),
                  "--future-input", path("fut.csv"), "--nx-bound", "4", "-o",
                  path("sim2.csv")}),
            kNegative);
}

TEST_F(Cli, ReproduceBatchReactor) {
  for (const char* seed : {"0", "1", "4"}) {
    const fs::path out = dir_ / (std::string("rep") + seed);
    ASSERT_EQ(call({"reproduce-batch-reactor", "--seed", seed, "-o", out.string()}),
              kSuccess)
        << err_.str();
    EXPECT_NE(out_.str().find("within_thresholds: true"), std::string::npos);
    const auto sim = read_trajectory(out / "simulation.csv");
    const auto truth = read_trajectory(out / "truth.csv");
    EXPECT_EQ(sim.length(), 8);
    EXPECT_LE((sim.y() - truth.y()).norm(), 1e-6);
    EXPECT_TRUE(fs::exists(out / "report.json"));
    EXPECT_TRUE(fs::exists(out / "figure.csv"));
  }
  const auto s = reproduce_batch_reactor(5, {});
  EXPECT_TRUE(s.cpe_order8);
  EXPECT_LE(s.absolute_error, 1e-6);
  EXPECT_LE(s.relative_error, 1e-9);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(call({}), kInputError);
  EXPECT_EQ(call({"no-such-command"}), kInputError);
  EXPECT_EQ(call({"--help"}), kSuccess);
  EXPECT_EQ(call({"simulate", path("data.json")}), kInputError);
}

}  // namespace
}  // namespace fwfl::cli
