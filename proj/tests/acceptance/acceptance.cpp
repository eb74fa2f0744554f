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
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fwfl/batch_reactor.hpp"
#include "fwfl/fwfl.hpp"
#include "support/generators.hpp"

namespace {

using fwfl::testing::Rng;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

fwfl::SpectralDataset batch_reactor_data() {
  return fwfl::testing::unit_direction_dataset(fwfl::examples::batch_reactor(),
                                               fwfl::examples::batch_reactor_grid());
}

Outcome batch_reactor_cpe() {
  const auto start = Clock::now();
  const auto data = batch_reactor_data();
  const auto r = fwfl::fd_cpe_check(data, 8);
  const double elapsed = seconds_since(start);

  Eigen::Index max_order = 0;
  for (Eigen::Index order = 1; order <= 25; ++order) {
    if (!fwfl::fd_cpe_check(data, order).is_cpe) break;
    max_order = order;
  }
  return {r.is_cpe && elapsed < 1.0,
          fmt("order 8 rank %td/%td, gram min eig %.3e (threshold %.3e), %.3f s; "
              "max CPE order by rank: %td (2MQ = %td)",
              r.rank, r.required_rank, r.min_eigenvalue, r.pd_threshold, elapsed,
              max_order, r.columns)};
}

Outcome batch_reactor_simulation() {
  const auto start = Clock::now();
  const auto model = fwfl::examples::batch_reactor();
  const auto data = batch_reactor_data();
  bool all = true;
  double worst_abs = 0.0, worst_rel = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const Eigen::MatrixXd u = rng.matrix(2, 8);
    const auto truth = fwfl::simulate_time(model, Eigen::VectorXd::Zero(4), u);
    const fwfl::SimulationProblem problem{data, u.leftCols(4), truth.y().leftCols(4),
                                          u.rightCols(4), 4};
    const auto r = fwfl::dd_simulate(problem);
    const double abs_err = (r.y_future - truth.y().rightCols(4)).norm();
    const double rel_err = abs_err / truth.y().norm();
    worst_abs = std::max(worst_abs, abs_err);
    worst_rel = std::max(worst_rel, rel_err);
    all = all && abs_err <= 1e-6 && rel_err <= 1e-9;
  }
  const double elapsed = seconds_since(start);
  return {all && elapsed < 5.0,
          fmt("10 seeds, worst abs %.3e (<= 1e-6), worst rel %.3e (<= 1e-9), %.3f s",
              worst_abs, worst_rel, elapsed)};
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  Rng rng(2026);
  int disagreements = 0, misclassified = 0, candidates = 0;
  for (int model_index = 0; model_index < 50; ++model_index) {
    const Eigen::Index nx = rng.integer(1, 3), nu = rng.integer(1, 2);
    const Eigen::Index ny = rng.integer(1, 2);
    const auto model = fwfl::testing::random_model(rng, nx, nu, ny);
    // Non-members need room outside the behaviour: L n_y > n_x.
    const Eigen::Index depth = nx / ny + rng.integer(1, 2);
    const Eigen::Index order = depth + nx;
    const Eigen::Index n = (nu + 1) * order + 4;
    const auto td = fwfl::testing::random_time_data(rng, model, 1, n);
    const auto fd = fwfl::testing::random_dataset(
        rng, model,
        fwfl::testing::random_grid(rng, fwfl::testing::frequencies_for(nu, order, 1)),
        1);
    for (int k = 0; k < 40; ++k) {
      const bool member = k < 20;
      auto candidate = fwfl::simulate_time(model, rng.vector(nx), rng.matrix(nu, depth));
      if (!member) candidate = fwfl::testing::non_trajectory(rng, model, candidate);
      const bool in_fd = fwfl::fd_wfl_membership(fd, candidate, nx).is_member;
      const bool in_td = fwfl::td_wfl_membership(td, candidate, nx).is_member;
      ++candidates;
      if (in_fd != in_td) ++disagreements;
      if (in_fd != member) ++misclassified;
    }
  }
  const double elapsed = seconds_since(start);
  return {disagreements == 0 && elapsed < 60.0,
          fmt("%d candidates on 50 models, %d disagreements, %d misclassified, %.2f s",
              candidates, disagreements, misclassified, elapsed)};
}

Outcome lambda_positive_definite() {
  int tested = 0, violations = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(1000 + seed);
    const Eigen::Index nx = rng.integer(1, 4), nu = rng.integer(1, 2);
    const Eigen::Index depth = rng.integer(1, 4), q = rng.integer(1, 2);
    const auto model = fwfl::testing::random_model(rng, nx, nu, rng.integer(1, 2));
    const Eigen::Index m = std::max<Eigen::Index>(
        1, fwfl::testing::frequencies_for(nu, depth + nx, q, 0) + rng.integer(-1, 2));
    const auto data =
        fwfl::testing::random_dataset(rng, model, fwfl::testing::random_grid(rng, m), q);
    if (!fwfl::fd_cpe_check(data, depth + nx).is_cpe) continue;
    ++tested;
    const Eigen::MatrixXd lambda = fwfl::lambda_matrix(model, data, depth);
    if (fwfl::linalg::min_eigenvalue(lambda) <= fwfl::Tolerances{}.pd_threshold(lambda))
      ++violations;
  }
  return {violations == 0 && tested > 0,
          fmt("50 seeds, %d with CPE data, %d violations", tested, violations)};
}

Outcome counting_bound() {
  Rng rng(77);
  int violations = 0, cpe_cases = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index nu = rng.integer(1, 3), q = rng.integer(1, 3);
    const Eigen::Index m = rng.integer(1, 6), order = rng.integer(1, 10);
    const auto model = fwfl::testing::random_model(rng, 2, nu, 1);
    const auto data = fwfl::testing::random_dataset(
        rng, model, fwfl::testing::random_grid(rng, m, trial % 4 == 0), q);
    const auto r = fwfl::fd_cpe_check(data, order);
    if (r.is_cpe) ++cpe_cases;
    if (r.is_cpe && 2 * m * q < order * nu) ++violations;
  }
  return {violations == 0,
          fmt("200 datasets, %d CPE, %d violations", cpe_cases, violations)};
}

Outcome realness() {
  Rng rng(55);
  double worst_pair = 0.0, worst_gram = 0.0, worst_lambda = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::MatrixXcd a = rng.complex_matrix(rng.integer(1, 6), rng.integer(1, 8));
    Eigen::MatrixXcd ext(a.rows(), 2 * a.cols());
    ext << a, a.conjugate();
    const Eigen::MatrixXcd lhs = ext * ext.adjoint();
    const Eigen::MatrixXd rhs = 2.0 * (a * a.adjoint()).real();
    worst_pair = std::max(worst_pair, (lhs - rhs.cast<std::complex<double>>()).norm() /
                                          std::max(rhs.norm(), 1.0));
  }
  // Library Gram and Lambda against their complex constructions.
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index nx = rng.integer(1, 3), nu = rng.integer(1, 2);
    const Eigen::Index q = rng.integer(1, 2), m = rng.integer(1, 5);
    const Eigen::Index depth = rng.integer(1, 3);
    const auto model = fwfl::testing::random_model(rng, nx, nu, 1);
    const auto data = fwfl::testing::random_dataset(
        rng, model, fwfl::testing::random_grid(rng, m, trial % 2 == 0), q);
    const Eigen::MatrixXcd e =
        fwfl::conjugate_extended_matrix(data.inputs(), data.omegas(), depth);
    const Eigen::MatrixXcd gram_c = 0.5 * e * e.adjoint();
    const Eigen::MatrixXd gram = fwfl::fd_cpe_gram(data, depth);
    worst_gram = std::max(worst_gram,
                          (gram_c - gram.cast<std::complex<double>>()).norm() /
                              std::max(gram.norm(), 1.0));

    Eigen::MatrixXcd z(nx + depth * nu, m * q);
    for (Eigen::Index i = 0; i < q; ++i) {
      const auto& ex = data.experiment(static_cast<std::size_t>(i));
      const Eigen::MatrixXcd fu = fwfl::f_matrix(ex.U, data.omegas(), depth);
      for (Eigen::Index f = 0; f < m; ++f) {
        z.col(i * m + f) << fwfl::evaluate_spectrum(model, data.omegas()(f),
                                                    ex.U.col(f)).X,
            fu.col(f);
      }
    }
    Eigen::MatrixXcd zext(z.rows(), 2 * z.cols());
    zext << z, z.conjugate();
    const Eigen::MatrixXcd lambda_c = 0.5 * zext * zext.adjoint();
    const Eigen::MatrixXd lambda = fwfl::lambda_matrix(model, data, depth);
    worst_lambda = std::max(worst_lambda,
                            (lambda_c - lambda.cast<std::complex<double>>()).norm() /
                                std::max(lambda.norm(), 1.0));
  }
  const bool pass = worst_pair <= 1e-12 && worst_gram <= 1e-12 && worst_lambda <= 1e-12;
  return {pass, fmt("conjugate-pair identity worst %.2e on 100 matrices; Gram %.2e, "
                    "Lambda %.2e (all <= 1e-12); Gamma, Gram, Lambda stored real",
                    worst_pair, worst_gram, worst_lambda)};
}

Outcome solution_independence() {
  Rng rng(4242);
  double worst = 0.0;
  int observable = 0;
  for (int seed = 0; seed < 25; ++seed) {
    const auto model = fwfl::testing::random_model(rng, 3, 1, 1, true, true);
    const Eigen::Index l0 = 3, lf = 3;
    if (fwfl::observability_defect(model, l0) == 0) ++observable;
    const Eigen::Index m = fwfl::testing::frequencies_for(1, l0 + lf + 3, 1);
    auto data = fwfl::testing::random_dataset(rng, model,
                                              fwfl::testing::random_grid(rng, m), 1);
    const Eigen::MatrixXd u = rng.matrix(1, l0 + lf);
    const auto truth = fwfl::simulate_time(model, rng.vector(3), u);
    const fwfl::SimulationProblem problem{std::move(data), u.leftCols(l0),
                                          truth.y().leftCols(l0), u.rightCols(lf), 3};
    const auto r = fwfl::dd_simulate(problem);
    const auto eq = fwfl::simulation_equations(problem);
    const Eigen::MatrixXd kernel = fwfl::linalg::kernel_basis(eq.lhs);
    Eigen::VectorXd g = r.g;
    if (kernel.cols() > 0) {
      Eigen::VectorXd z = kernel * rng.vector(kernel.cols());
      g += z * (r.g.norm() / z.norm());
    }
    const Eigen::VectorXd y_alt = eq.output_map.bottomRows(lf) * g;
    const Eigen::VectorXd y_min = fwfl::stack_samples(r.y_future);
    worst = std::max(worst, (y_alt - y_min).norm() / std::max(y_min.norm(), 1e-300));
  }
  return {worst <= 1e-7 && observable == 25,
          fmt("25 observable models, worst relative difference %.3e (<= 1e-7)", worst)};
}

Outcome round_trips() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "fwfl_acceptance_round_trip";
  fs::remove_all(dir);
  fs::create_directories(dir);
  Rng rng(99);
  int failures[4] = {0, 0, 0, 0};
  // Mix of magnitudes so the text encoding is exercised across exponents.
  auto spread = [&](Eigen::MatrixXd m) {
    for (Eigen::Index i = 0; i < m.size(); ++i)
      m.data()[i] *= std::pow(10.0, rng.uniform(-300, 300));
    return m;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index nx = rng.integer(1, 4), nu = rng.integer(1, 3);
    const Eigen::Index ny = rng.integer(1, 3), m = rng.integer(1, 6);

    const fwfl::StateSpaceModel model(spread(rng.matrix(nx, nx)), spread(rng.matrix(nx, nu)),
                                      spread(rng.matrix(ny, nx)), spread(rng.matrix(ny, nu)));
    fwfl::write_model(dir / "model.json", model);
    const auto model_back = fwfl::read_model(dir / "model.json");
    if (model_back.A() != model.A() || model_back.B() != model.B() ||
        model_back.C() != model.C() || model_back.D() != model.D())
      ++failures[0];

    std::vector<Eigen::MatrixXcd> g;
    for (Eigen::Index k = 0; k < m; ++k) {
      g.emplace_back(ny, nu);
      g.back().real() = spread(rng.matrix(ny, nu));
      g.back().imag() = spread(rng.matrix(ny, nu));
    }
    const fwfl::FrfMeasurementSet frf(fwfl::testing::random_grid(rng, m, trial % 2 == 0), g);
    fwfl::write_frf(dir / "frf.csv", frf);
    const auto frf_back = fwfl::read_frf(dir / "frf.csv");
    bool frf_ok = frf_back.omegas() == frf.omegas();
    for (Eigen::Index k = 0; k < m && frf_ok; ++k)
      frf_ok = frf_back.responses()[k] == frf.responses()[k];
    if (!frf_ok) ++failures[1];

    std::vector<fwfl::SpectralExperiment> experiments;
    for (Eigen::Index i = 0, q = rng.integer(1, 3); i < q; ++i) {
      fwfl::SpectralExperiment e{Eigen::MatrixXcd(nu, m), Eigen::MatrixXcd(ny, m)};
      e.U.real() = spread(rng.matrix(nu, m));
      e.U.imag() = spread(rng.matrix(nu, m));
      e.Y.real() = spread(rng.matrix(ny, m));
      e.Y.imag() = spread(rng.matrix(ny, m));
      experiments.push_back(e);
    }
    const fwfl::SpectralDataset data(fwfl::testing::random_grid(rng, m), experiments);
    fwfl::write_dataset(dir / "data.json", data);
    const auto data_back = fwfl::read_dataset(dir / "data.json");
    bool data_ok = data_back.omegas() == data.omegas() &&
                   data_back.num_experiments() == data.num_experiments();
    for (std::size_t i = 0; data_ok && i < data.experiments().size(); ++i)
      data_ok = data_back.experiment(i).U == data.experiment(i).U &&
                data_back.experiment(i).Y == data.experiment(i).Y;
    if (!data_ok) ++failures[2];

    const Eigen::Index n = rng.integer(1, 20);
    const fwfl::TimeTrajectory traj(spread(rng.matrix(nu, n)), spread(rng.matrix(ny, n)));
    fwfl::write_trajectory(dir / "traj.csv", traj, rng.integer(0, 5));
    const auto traj_back = fwfl::read_trajectory(dir / "traj.csv");
    if (traj_back.u() != traj.u() || traj_back.y() != traj.y()) ++failures[3];
  }
  fs::remove_all(dir);
  const int total = failures[0] + failures[1] + failures[2] + failures[3];
  return {total == 0, fmt("100 trials each; mismatches model %d, frf %d, dataset %d, "
                          "trajectory %d",
                          failures[0], failures[1], failures[2], failures[3])};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"batch-reactor CPE", batch_reactor_cpe},
      {"batch-reactor simulation", batch_reactor_simulation},
      {"oracle equivalence", oracle_equivalence},
      {"Lambda positive definite under CPE", lambda_positive_definite},
      {"counting bound", counting_bound},
      {"symmetry and realness", realness},
      {"solution independence", solution_independence},
      {"format round trips", round_trips},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
