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

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fwfl/fwfl.hpp"

namespace fwfl::cli {
namespace {

using nlohmann::json;

struct ToleranceFlags {
  std::optional<double> rank;
  std::optional<double> pd;
  std::optional<double> membership;

  Tolerances resolve() const {
    Tolerances tol = Tolerances::from_environment();
    if (rank) tol.rank_relative = *rank;
    if (pd) tol.pd_relative = *pd;
    if (membership) tol.membership = *membership;
    return tol;
  }
};

Eigen::MatrixXd gaussian(std::mt19937_64& rng, Eigen::Index rows,
                         Eigen::Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = normal(rng);
  }
  return m;
}

SpectralDataset unit_direction_dataset(const StateSpaceModel& model,
                                       const Eigen::VectorXd& omegas,
                                       const Tolerances& tol) {
  std::vector<Eigen::MatrixXcd> responses;
  for (Eigen::Index m = 0; m < omegas.size(); ++m) {
    responses.push_back(evaluate_transfer(model, omegas(m), tol));
  }
  return frf_to_datasets(FrfMeasurementSet(omegas, std::move(responses)));
}

void print_cpe(std::ostream& out, const FdCpeReport& r, Eigen::Index order,
               Eigen::Index nu) {
  out << "domain: freq\n"
      << "order: " << order << '\n'
      << "is_cpe: " << (r.is_cpe ? "true" : "false") << '\n'
      << "rank: " << r.rank << " / " << r.required_rank << '\n'
      << "min_eigenvalue: " << format_double(r.min_eigenvalue) << '\n'
      << "pd_threshold: " << format_double(r.pd_threshold) << '\n'
      << "gram_positive_definite: "
      << (r.gram_positive_definite ? "true" : "false") << '\n'
      << "counting_bound: 2MQ = " << r.columns << (r.counting_feasible ? " >= " : " < ")
      << "L*n_u = " << order * nu
      << (r.counting_feasible ? " (feasible)" : " (infeasible)") << '\n'
      << "attainable_rank: " << r.attainable_rank << '\n';
}

// ---- gen-data --------------------------------------------------------------

struct GenDataArgs {
  std::string model;
  std::vector<double> omegas;
  std::vector<double> grid;
  std::string excitation = "unit-directions";
  std::string out;
  std::string frf_out;
};

int gen_data(const GenDataArgs& a, const Tolerances& tol, std::ostream& out,
             std::ostream& err) {
  const StateSpaceModel model = read_model(a.model);
  std::vector<double> omegas = a.omegas;
  if (!a.grid.empty()) {
    const auto count = static_cast<long long>(std::llround(a.grid[0]));
    if (count < 0 || static_cast<double>(count) != a.grid[0]) {
      err << "error: --grid M must be a non-negative integer\n";
      return kInputError;
    }
    for (long long m = 0; m < count; ++m) {
      omegas.push_back(a.grid[1] + a.grid[2] * static_cast<double>(m));
    }
  }
  if (omegas.empty()) {
    err << "error: empty frequency grid\n";
    return kInputError;
  }
  const Eigen::VectorXd grid =
      Eigen::Map<const Eigen::VectorXd>(omegas.data(),
                                        static_cast<Eigen::Index>(omegas.size()));
  std::vector<Eigen::MatrixXcd> responses;
  for (Eigen::Index m = 0; m < grid.size(); ++m) {
    try {
      responses.push_back(evaluate_transfer(model, grid(m), tol));
    } catch (const SingularResolventError& e) {
      err << "error: singular resolvent at omega = " << format_double(e.omega())
          << '\n';
      return kInputError;
    }
  }
  const FrfMeasurementSet frf(grid, std::move(responses));
  const SpectralDataset data = frf_to_datasets(frf);
  write_dataset(a.out, data);
  if (!a.frf_out.empty()) write_frf(a.frf_out, frf);
  out << "wrote " << data.num_experiments() << " experiments x "
      << data.num_frequencies() << " frequencies to " << a.out << '\n';
  return kSuccess;
}

// ---- check-pe --------------------------------------------------------------

struct CheckPeArgs {
  std::vector<std::string> inputs;
  long long order = 0;
  std::string domain = "freq";
};

int check_pe(const CheckPeArgs& a, const Tolerances& tol, std::ostream& out) {
  const auto order = static_cast<Eigen::Index>(a.order);
  if (a.domain == "freq") {
    if (a.inputs.size() != 1) {
      throw ArgumentError("--domain freq takes exactly one dataset manifest");
    }
    const SpectralDataset data = read_dataset(a.inputs.front());
    const FdCpeReport r = fd_cpe_check(data, order, tol);
    print_cpe(out, r, order, data.n_u());
    return r.is_cpe ? kSuccess : kNegative;
  }
  std::vector<Eigen::MatrixXd> sequences;
  for (const auto& path : a.inputs) sequences.push_back(read_inputs(path));
  const Eigen::Index n = sequences.front().cols();
  if (order > n) {
    throw ArgumentError("order exceeds sequence length " + std::to_string(n));
  }
  const TdCpeResult r = td_cpe(sequences, order, tol);
  const auto q = static_cast<Eigen::Index>(sequences.size());
  const Eigen::Index columns = q * (n - order + 1);
  out << "domain: time\n"
      << "order: " << order << '\n'
      << "is_cpe: " << (r.is_cpe ? "true" : "false") << '\n'
      << "rank: " << r.rank << " / " << r.required_rank << '\n'
      << "rank_deficiency: " << r.required_rank - r.rank << '\n'
      << "counting_bound: Q(N-L+1) = " << columns
      << (columns >= r.required_rank ? " >= " : " < ") << "L*n_u = "
      << r.required_rank << '\n';
  return r.is_cpe ? kSuccess : kNegative;
}

// ---- membership ------------------------------------------------------------

struct MembershipArgs {
  std::string dataset;
  std::string trajectory;
  long long nx_bound = 0;
  std::string g_out;
};

void write_vector(const std::string& path, const Eigen::VectorXd& v) {
  std::ofstream f(path);
  if (!f) throw FormatError("cannot write " + path);
  f << "index,g\n";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    f << i << ',' << format_double(v(i)) << '\n';
  }
}

int membership(const MembershipArgs& a, const Tolerances& tol,
               std::ostream& out) {
  const SpectralDataset data = read_dataset(a.dataset);
  const TimeTrajectory candidate = read_trajectory(a.trajectory);
  const MembershipResult r = fd_wfl_membership(
      data, candidate, static_cast<Eigen::Index>(a.nx_bound), tol);
  out << (r.is_member ? "member" : "non-member") << '\n'
      << "residual: " << format_double(r.residual) << '\n'
      << "tolerance: " << format_double(tol.membership) << '\n';
  if (r.g && !a.g_out.empty()) write_vector(a.g_out, *r.g);
  return r.is_member ? kSuccess : kNegative;
}

// ---- simulate --------------------------------------------------------------

struct SimulateArgs {
  std::string dataset;
  std::string initial;
  std::string future;
  long long nx_bound = 0;
  std::string out;
  std::string diagnostics;
};

json diagnostics_json(const SimulationResult& r) {
  return json{{"residual", r.residual},
              {"kernel_dimension", r.kernel_dimension},
              {"kernel_effect_dimension", r.kernel_effect_dimension},
              {"coefficients", r.g.size()}};
}

int simulate(const SimulateArgs& a, const Tolerances& tol, std::ostream& out) {
  const TimeTrajectory initial = read_trajectory(a.initial);
  SimulationProblem problem{read_dataset(a.dataset), initial.u(), initial.y(),
                            read_inputs(a.future),
                            static_cast<Eigen::Index>(a.nx_bound)};
  const SimulationResult r = dd_simulate(problem, tol);
  write_trajectory(a.out, TimeTrajectory(problem.u_future, r.y_future),
                   problem.initial_length());
  out << "wrote " << r.y_future.cols() << " simulated samples to " << a.out
      << '\n'
      << "diagnostics:\n"
      << "  residual: " << format_double(r.residual) << '\n'
      << "  kernel_dimension: " << r.kernel_dimension << '\n'
      << "  kernel_effect_dimension: " << r.kernel_effect_dimension << '\n';
  if (!a.diagnostics.empty()) {
    std::ofstream f(a.diagnostics);
    if (!f) throw FormatError("cannot write " + a.diagnostics);
    f << diagnostics_json(r).dump(2) << '\n';
  }
  return kSuccess;
}

// ---- reproduce-batch-reactor -----------------------------------------------

struct ReproduceArgs {
  std::uint64_t seed = 0;
  std::string out_dir;
};

constexpr double kAbsoluteThreshold = 1e-6;
constexpr double kRelativeThreshold = 1e-9;

int reproduce(const ReproduceArgs& a, std::ostream& out) {
  const ReproductionSummary s = reproduce_batch_reactor(a.seed, a.out_dir);
  const bool ok = s.absolute_error <= kAbsoluteThreshold &&
                  s.relative_error <= kRelativeThreshold;
  out << "seed: " << s.seed << '\n'
      << "cpe_order_8: " << (s.cpe_order8 ? "true" : "false") << '\n'
      << "cpe_order_12: " << (s.cpe_order12 ? "true" : "false") << '\n'
      << "absolute_error: " << format_double(s.absolute_error) << '\n'
      << "relative_error: " << format_double(s.relative_error) << '\n'
      << "residual: " << format_double(s.residual) << '\n'
      << "within_thresholds: " << (ok ? "true" : "false") << '\n';
  if (!a.out_dir.empty()) out << "artifacts: " << a.out_dir << '\n';
  return ok ? kSuccess : kNegative;
}

}  // namespace

ReproductionSummary reproduce_batch_reactor(std::uint64_t seed,
                                            const std::filesystem::path& out_dir) {
  constexpr Eigen::Index kInitial = 4;
  constexpr Eigen::Index kFuture = 4;
  const Tolerances tol;
  const StateSpaceModel model = examples::batch_reactor();
  const Eigen::VectorXd grid = examples::batch_reactor_grid();
  const SpectralDataset data = unit_direction_dataset(model, grid, tol);

  ReproductionSummary s;
  s.seed = seed;
  const FdCpeReport cpe8 = fd_cpe_check(data, 8, tol);
  const FdCpeReport cpe12 = fd_cpe_check(data, 12, tol);
  s.cpe_order8 = cpe8.is_cpe;
  s.cpe_order12 = cpe12.is_cpe;
  s.cpe_min_eigenvalue_order8 = cpe8.min_eigenvalue;

  std::mt19937_64 rng(seed);
  const Eigen::MatrixXd u = gaussian(rng, model.n_u(), kInitial + kFuture);
  const TimeTrajectory truth =
      simulate_time(model, Eigen::VectorXd::Zero(model.n_x()), u);

  const Eigen::Index nx = model.n_x();
  SimulationProblem problem{data, u.leftCols(kInitial),
                            truth.y().leftCols(kInitial), u.rightCols(kFuture),
                            nx};
  const SimulationResult r = dd_simulate(problem, tol);
  const Eigen::MatrixXd y_true_future = truth.y().rightCols(kFuture);
  s.absolute_error = (r.y_future - y_true_future).norm();
  s.relative_error = s.absolute_error / truth.y().norm();
  s.residual = r.residual;

  // Literal reading: L = L_0 = 4, CPE of order 8, no future window.
  SimulationProblem literal{data, problem.u_ini, problem.y_ini,
                            Eigen::MatrixXd(model.n_u(), 0), nx};
  s.literal_residual = dd_simulate(literal, tol).residual;

  if (out_dir.empty()) return s;
  std::filesystem::create_directories(out_dir);
  write_model(out_dir / "model.json", model);
  write_dataset(out_dir / "dataset.json", data);
  write_trajectory(out_dir / "initial.csv", truth.window(0, kInitial));
  write_inputs(out_dir / "future_inputs.csv", problem.u_future, kInitial);
  Eigen::MatrixXd y_dd(model.n_y(), kInitial + kFuture);
  y_dd << problem.y_ini, r.y_future;
  write_trajectory(out_dir / "simulation.csv", TimeTrajectory(u, y_dd));
  write_trajectory(out_dir / "truth.csv", truth);

  {
    std::ofstream fig(out_dir / "figure.csv");
    fig << "k,simulated";
    for (Eigen::Index i = 1; i <= model.n_y(); ++i) fig << ",y_" << i;
    for (Eigen::Index i = 1; i <= model.n_y(); ++i) fig << ",ytrue_" << i;
    fig << '\n';
    for (Eigen::Index k = 0; k < y_dd.cols(); ++k) {
      fig << k << ',' << (k >= kInitial ? 1 : 0);
      for (Eigen::Index i = 0; i < model.n_y(); ++i) {
        fig << ',' << format_double(y_dd(i, k));
      }
      for (Eigen::Index i = 0; i < model.n_y(); ++i) {
        fig << ',' << format_double(truth.y()(i, k));
      }
      fig << '\n';
    }
  }

  const json report{
      {"seed", seed},
      {"generator", "std::mt19937_64 + std::normal_distribution(0, 1)"},
      {"frequencies", {{"M", data.num_frequencies()}, {"start", 0.1}, {"step", 0.1}}},
      {"experiments", data.num_experiments()},
      {"initial_length", kInitial},
      {"future_length", kFuture},
      {"cpe",
       {{"order_8",
         {{"is_cpe", cpe8.is_cpe},
          {"rank", cpe8.rank},
          {"min_eigenvalue", cpe8.min_eigenvalue},
          {"pd_threshold", cpe8.pd_threshold}}},
        {"order_12",
         {{"is_cpe", cpe12.is_cpe},
          {"rank", cpe12.rank},
          {"min_eigenvalue", cpe12.min_eigenvalue},
          {"pd_threshold", cpe12.pd_threshold}}}}},
      {"absolute_error", s.absolute_error},
      {"relative_error", s.relative_error},
      {"residual", s.residual},
      {"kernel_dimension", r.kernel_dimension},
      {"kernel_effect_dimension", r.kernel_effect_dimension},
      {"literal_L_equals_L0", {{"cpe_order", 8}, {"residual", s.literal_residual}}},
      {"thresholds", {{"absolute", kAbsoluteThreshold}, {"relative", kRelativeThreshold}}}};
  std::ofstream(out_dir / "report.json") << report.dump(2) << '\n';
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Frequency-domain fundamental lemma toolkit", "fwfl"};
  app.require_subcommand(1);
  ToleranceFlags tflags;
  app.add_option("--tol-rank", tflags.rank,
                 "relative singular-value threshold (env FWFL_TOL_RANK)");
  app.add_option("--tol-pd", tflags.pd,
                 "relative positive-definiteness floor (env FWFL_TOL_PD)");
  app.add_option("--tol-membership", tflags.membership,
                 "relative residual bound for membership (env FWFL_TOL_MEMBERSHIP)");

  GenDataArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-data", "sample spectra of a model");
  gen_cmd->fallthrough();
  gen_cmd->add_option("model", gen.model, "model JSON file")->required();
  auto* omegas_opt = gen_cmd->add_option("--omegas", gen.omegas,
                                         "frequencies in [0, pi)")->delimiter(',');
  auto* grid_opt = gen_cmd->add_option("--grid", gen.grid, "M start step")
                       ->expected(3)
                       ->excludes(omegas_opt);
  omegas_opt->excludes(grid_opt);
  gen_cmd->add_option("--excitation", gen.excitation, "excitation scheme")
      ->check(CLI::IsMember({"unit-directions"}));
  gen_cmd->add_option("-o,--out", gen.out, "dataset manifest to write")->required();
  gen_cmd->add_option("--frf-out", gen.frf_out, "also write the FRF CSV");

  CheckPeArgs pe;
  auto* pe_cmd = app.add_subcommand("check-pe", "check collective persistence of excitation");
  pe_cmd->fallthrough();
  pe_cmd->add_option("inputs", pe.inputs,
                     "dataset manifest (freq) or trajectory files (time)")
      ->required();
  pe_cmd->add_option("--order", pe.order, "order L")->required()->check(CLI::PositiveNumber);
  pe_cmd->add_option("--domain", pe.domain, "freq or time")
      ->check(CLI::IsMember({"freq", "time"}));

  MembershipArgs mem;
  auto* mem_cmd = app.add_subcommand("membership", "test whether a trajectory is consistent with the data");
  mem_cmd->fallthrough();
  mem_cmd->add_option("dataset", mem.dataset, "dataset manifest")->required();
  mem_cmd->add_option("trajectory", mem.trajectory, "trajectory CSV")->required();
  mem_cmd->add_option("--nx-bound", mem.nx_bound, "upper bound on n_x")
      ->required()
      ->check(CLI::NonNegativeNumber);
  mem_cmd->add_option("--g-out", mem.g_out, "write the coefficient vector");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "data-driven simulation");
  sim_cmd->fallthrough();
  sim_cmd->add_option("dataset", sim.dataset, "dataset manifest")->required();
  sim_cmd->add_option("--initial", sim.initial, "initial trajectory CSV")->required();
  sim_cmd->add_option("--future-input", sim.future, "future input CSV")->required();
  sim_cmd->add_option("--nx-bound", sim.nx_bound, "upper bound on n_x")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("-o,--out", sim.out, "simulated trajectory CSV")->required();
  sim_cmd->add_option("--diagnostics", sim.diagnostics, "diagnostics JSON");

  ReproduceArgs rep;
  auto* rep_cmd = app.add_subcommand("reproduce-batch-reactor",
                                     "batch-reactor data-driven simulation");
  rep_cmd->fallthrough();
  rep_cmd->add_option("--seed", rep.seed, "seed of the random inputs");
  rep_cmd->add_option("-o,--out-dir", rep.out_dir, "artifact directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    const Tolerances tol = tflags.resolve();
    if (*gen_cmd) return gen_data(gen, tol, out, err);
    if (*pe_cmd) return check_pe(pe, tol, out);
    if (*mem_cmd) return membership(mem, tol, out);
    if (*sim_cmd) return simulate(sim, tol, out);
    if (*rep_cmd) return reproduce(rep, out);
  } catch (const CpeHypothesisError& e) {
    err << "hypothesis failure: " << e.what() << '\n';
    return kHypothesis;
  } catch (const InconsistentTrajectoryError& e) {
    err << "inconsistent initial trajectory: " << e.what() << '\n';
    return kNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace fwfl::cli
