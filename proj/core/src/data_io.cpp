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
#include "fwfl/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "fwfl/errors.hpp"

namespace fwfl {
namespace {

using nlohmann::json;
using cd = std::complex<double>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.emplace_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

double parse_number(const std::string& field, std::size_t line) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw FormatError("line " + std::to_string(line) + ": '" + field +
                      "' is not a number");
  }
  if (!std::isfinite(value)) {
    throw FormatError("line " + std::to_string(line) + ": non-finite value");
  }
  return value;
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split(line);
    if (table.header.empty()) {
      table.header = std::move(fields);
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(table.header.size()) + " fields, got " +
                        std::to_string(fields.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_number(f, line_no));
    table.rows.push_back(std::move(row));
  }
  if (table.header.empty()) throw FormatError("empty CSV file");
  return table;
}

void expect_header(const std::vector<std::string>& got,
                   const std::vector<std::string>& want) {
  if (got != want) {
    std::string w;
    for (const auto& h : want) w += (w.empty() ? "" : ",") + h;
    throw FormatError("unexpected CSV header, expected: " + w);
  }
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  return out;
}

// Library validation errors raised while building values from a file are
// reported as format errors.
template <typename F>
auto validated(const std::string& what, F&& build) {
  try {
    return build();
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(what + ": " + e.what());
  }
}

Eigen::MatrixXd matrix_from_json(const json& j, const char* key,
                                 Eigen::Index rows, Eigen::Index cols) {
  if (!j.contains(key)) throw FormatError(std::string("missing \"") + key + "\"");
  const json& a = j.at(key);
  if (!a.is_array() || static_cast<Eigen::Index>(a.size()) != rows * cols) {
    throw FormatError(std::string("\"") + key + "\" must be an array of " +
                      std::to_string(rows * cols) + " numbers");
  }
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& v = a.at(static_cast<std::size_t>(r * cols + c));
      if (!v.is_number()) {
        throw FormatError(std::string("\"") + key + "\" has a non-numeric entry");
      }
      m(r, c) = v.get<double>();
    }
  }
  if (!m.allFinite()) throw FormatError(std::string("\"") + key + "\" is not finite");
  return m;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json a = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) a.push_back(m(r, c));
  }
  return a;
}

Eigen::Index positive_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw FormatError(std::string("\"") + key + "\" must be an integer");
  }
  const auto v = j.at(key).get<long long>();
  if (v < 1) throw FormatError(std::string("\"") + key + "\" must be >= 1");
  return static_cast<Eigen::Index>(v);
}

json parse_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<std::string> experiment_header(Eigen::Index nu, Eigen::Index ny) {
  std::vector<std::string> h{"omega"};
  for (Eigen::Index k = 1; k <= nu; ++k) h.push_back("reU_" + std::to_string(k));
  for (Eigen::Index k = 1; k <= nu; ++k) h.push_back("imU_" + std::to_string(k));
  for (Eigen::Index k = 1; k <= ny; ++k) h.push_back("reY_" + std::to_string(k));
  for (Eigen::Index k = 1; k <= ny; ++k) h.push_back("imY_" + std::to_string(k));
  return h;
}

void write_row(std::ostream& out, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ',';
    out << format_double(values[i]);
  }
  out << '\n';
}

void write_header(std::ostream& out, const std::vector<std::string>& header) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) out << ',';
    out << header[i];
  }
  out << '\n';
}

std::vector<std::string> trajectory_header(Eigen::Index nu, Eigen::Index ny) {
  std::vector<std::string> h{"k"};
  for (Eigen::Index k = 1; k <= nu; ++k) h.push_back("u_" + std::to_string(k));
  for (Eigen::Index k = 1; k <= ny; ++k) h.push_back("y_" + std::to_string(k));
  return h;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

FrfMeasurementSet::FrfMeasurementSet(Eigen::VectorXd omegas,
                                     std::vector<Eigen::MatrixXcd> responses)
    : omegas_(std::move(omegas)), responses_(std::move(responses)) {
  if (omegas_.size() < 1) throw ArgumentError("FRF needs at least one frequency");
  if (static_cast<Eigen::Index>(responses_.size()) != omegas_.size()) {
    throw DimensionError("FRF needs one response matrix per frequency");
  }
  const auto rows = responses_.front().rows();
  const auto cols = responses_.front().cols();
  if (rows < 1 || cols < 1) throw DimensionError("empty FRF response matrix");
  for (const auto& g : responses_) {
    if (g.rows() != rows || g.cols() != cols) {
      throw DimensionError("FRF response matrices differ in size");
    }
    if (!g.allFinite()) throw ArgumentError("FRF responses must be finite");
  }
  for (Eigen::Index m = 0; m < omegas_.size(); ++m) {
    const double w = omegas_(m);
    if (!std::isfinite(w) || w < 0.0 || w >= std::numbers::pi) {
      throw ArgumentError("FRF frequency " + std::to_string(w) +
                          " outside [0, pi)");
    }
    if (m > 0 && !(w > omegas_(m - 1))) {
      throw ArgumentError("FRF frequencies must be strictly increasing");
    }
  }
}

SpectralDataset frf_to_datasets(const FrfMeasurementSet& frf) {
  const Eigen::Index m = frf.num_frequencies();
  const Eigen::Index nu = frf.n_u();
  std::vector<SpectralExperiment> experiments;
  for (Eigen::Index i = 0; i < nu; ++i) {
    SpectralExperiment e;
    e.U = Eigen::MatrixXcd::Zero(nu, m);
    e.U.row(i).setOnes();
    e.Y.resize(frf.n_y(), m);
    for (Eigen::Index k = 0; k < m; ++k) {
      e.Y.col(k) = frf.responses()[static_cast<std::size_t>(k)].col(i);
    }
    experiments.push_back(std::move(e));
  }
  return SpectralDataset(frf.omegas(), std::move(experiments));
}

SpectralDataset merge_datasets(std::span<const SpectralDataset> parts) {
  if (parts.empty()) throw ArgumentError("nothing to merge");
  const Eigen::Index nu = parts.front().n_u();
  const Eigen::Index ny = parts.front().n_y();
  std::vector<double> grid;
  for (const auto& p : parts) {
    if (p.n_u() != nu || p.n_y() != ny) {
      throw DimensionError("datasets to merge disagree on n_u or n_y");
    }
    grid.insert(grid.end(), p.omegas().begin(), p.omegas().end());
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const auto m = static_cast<Eigen::Index>(grid.size());

  std::vector<SpectralExperiment> experiments;
  for (const auto& p : parts) {
    std::vector<Eigen::Index> position(static_cast<std::size_t>(p.num_frequencies()));
    for (Eigen::Index k = 0; k < p.num_frequencies(); ++k) {
      position[static_cast<std::size_t>(k)] = std::lower_bound(grid.begin(), grid.end(), p.omegas()(k)) - grid.begin();
    }
    for (const auto& e : p.experiments()) {
      SpectralExperiment merged{Eigen::MatrixXcd::Zero(nu, m),
                                Eigen::MatrixXcd::Zero(ny, m)};
      for (Eigen::Index k = 0; k < p.num_frequencies(); ++k) {
        merged.U.col(position[static_cast<std::size_t>(k)]) = e.U.col(k);
        merged.Y.col(position[static_cast<std::size_t>(k)]) = e.Y.col(k);
      }
      experiments.push_back(std::move(merged));
    }
  }
  return SpectralDataset(Eigen::Map<const Eigen::VectorXd>(grid.data(), m),
                         std::move(experiments));
}

// ---- model files -----------------------------------------------------------

StateSpaceModel parse_model(std::istream& in) {
  const json j = parse_json(in);
  if (!j.is_object()) throw FormatError("model file must hold a JSON object");
  const Eigen::Index nx = positive_int(j, "n_x");
  const Eigen::Index nu = positive_int(j, "n_u");
  const Eigen::Index ny = positive_int(j, "n_y");
  Eigen::MatrixXd a = matrix_from_json(j, "A", nx, nx);
  Eigen::MatrixXd b = matrix_from_json(j, "B", nx, nu);
  Eigen::MatrixXd c = matrix_from_json(j, "C", ny, nx);
  Eigen::MatrixXd d = j.contains("D") ? matrix_from_json(j, "D", ny, nu)
                                      : Eigen::MatrixXd::Zero(ny, nu);
  return validated("model", [&] { return StateSpaceModel(a, b, c, d); });
}

StateSpaceModel read_model(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_model(in);
}

void write_model(std::ostream& out, const StateSpaceModel& model) {
  json j;
  j["n_x"] = model.n_x();
  j["n_u"] = model.n_u();
  j["n_y"] = model.n_y();
  j["A"] = matrix_to_json(model.A());
  j["B"] = matrix_to_json(model.B());
  j["C"] = matrix_to_json(model.C());
  j["D"] = matrix_to_json(model.D());
  out << j.dump(2) << '\n';
}

void write_model(const std::filesystem::path& path,
                 const StateSpaceModel& model) {
  auto out = open_out(path);
  write_model(out, model);
}

// ---- FRF files -------------------------------------------------------------

FrfMeasurementSet parse_frf(std::istream& in) {
  const CsvTable t = read_csv(in);
  if (t.header.empty() || t.header.front() != "omega" ||
      t.header.size() < 3 || (t.header.size() - 1) % 2 != 0) {
    throw FormatError("FRF header must be omega,reG_r_c,imG_r_c,...");
  }
  Eigen::Index ny = 0;
  Eigen::Index nu = 0;
  for (std::size_t k = 1; k < t.header.size(); k += 2) {
    int r = 0;
    int c = 0;
    if (std::sscanf(t.header[k].c_str(), "reG_%d_%d", &r, &c) != 2 || r < 1 ||
        c < 1) {
      throw FormatError("bad FRF column name '" + t.header[k] + "'");
    }
    ny = std::max<Eigen::Index>(ny, r);
    nu = std::max<Eigen::Index>(nu, c);
  }
  std::vector<std::string> want{"omega"};
  for (Eigen::Index r = 1; r <= ny; ++r) {
    for (Eigen::Index c = 1; c <= nu; ++c) {
      const std::string rc = std::to_string(r) + "_" + std::to_string(c);
      want.push_back("reG_" + rc);
      want.push_back("imG_" + rc);
    }
  }
  expect_header(t.header, want);

  Eigen::VectorXd omegas(static_cast<Eigen::Index>(t.rows.size()));
  std::vector<Eigen::MatrixXcd> responses;
  for (std::size_t m = 0; m < t.rows.size(); ++m) {
    const auto& row = t.rows[m];
    omegas(static_cast<Eigen::Index>(m)) = row[0];
    Eigen::MatrixXcd g(ny, nu);
    std::size_t col = 1;
    for (Eigen::Index r = 0; r < ny; ++r) {
      for (Eigen::Index c = 0; c < nu; ++c, col += 2) {
        g(r, c) = cd(row[col], row[col + 1]);
      }
    }
    responses.push_back(std::move(g));
  }
  return validated("FRF", [&] {
    return FrfMeasurementSet(std::move(omegas), std::move(responses));
  });
}

FrfMeasurementSet read_frf(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_frf(in);
}

void write_frf(std::ostream& out, const FrfMeasurementSet& frf) {
  std::vector<std::string> header{"omega"};
  for (Eigen::Index r = 1; r <= frf.n_y(); ++r) {
    for (Eigen::Index c = 1; c <= frf.n_u(); ++c) {
      const std::string rc = std::to_string(r) + "_" + std::to_string(c);
      header.push_back("reG_" + rc);
      header.push_back("imG_" + rc);
    }
  }
  write_header(out, header);
  for (Eigen::Index m = 0; m < frf.num_frequencies(); ++m) {
    const auto& g = frf.responses()[static_cast<std::size_t>(m)];
    std::vector<double> row{frf.omegas()(m)};
    for (Eigen::Index r = 0; r < g.rows(); ++r) {
      for (Eigen::Index c = 0; c < g.cols(); ++c) {
        row.push_back(g(r, c).real());
        row.push_back(g(r, c).imag());
      }
    }
    write_row(out, row);
  }
}

void write_frf(const std::filesystem::path& path, const FrfMeasurementSet& frf) {
  auto out = open_out(path);
  write_frf(out, frf);
}

// ---- dataset files ---------------------------------------------------------

SpectralDataset parse_experiment(std::istream& in, Eigen::Index n_u,
                                 Eigen::Index n_y) {
  const CsvTable t = read_csv(in);
  expect_header(t.header, experiment_header(n_u, n_y));
  const auto m = static_cast<Eigen::Index>(t.rows.size());
  if (m < 1) throw FormatError("experiment file has no samples");
  Eigen::VectorXd omegas(m);
  SpectralExperiment e{Eigen::MatrixXcd(n_u, m), Eigen::MatrixXcd(n_y, m)};
  for (Eigen::Index k = 0; k < m; ++k) {
    const auto& row = t.rows[static_cast<std::size_t>(k)];
    omegas(k) = row[0];
    for (Eigen::Index r = 0; r < n_u; ++r) {
      e.U(r, k) = cd(row[1 + r], row[1 + n_u + r]);
    }
    for (Eigen::Index r = 0; r < n_y; ++r) {
      e.Y(r, k) = cd(row[1 + 2 * n_u + r], row[1 + 2 * n_u + n_y + r]);
    }
  }
  return validated("experiment", [&] {
    return SpectralDataset(std::move(omegas), {std::move(e)});
  });
}

void write_experiment(std::ostream& out, const Eigen::VectorXd& omegas,
                      const SpectralExperiment& e) {
  write_header(out, experiment_header(e.U.rows(), e.Y.rows()));
  for (Eigen::Index k = 0; k < omegas.size(); ++k) {
    std::vector<double> row{omegas(k)};
    for (Eigen::Index r = 0; r < e.U.rows(); ++r) row.push_back(e.U(r, k).real());
    for (Eigen::Index r = 0; r < e.U.rows(); ++r) row.push_back(e.U(r, k).imag());
    for (Eigen::Index r = 0; r < e.Y.rows(); ++r) row.push_back(e.Y(r, k).real());
    for (Eigen::Index r = 0; r < e.Y.rows(); ++r) row.push_back(e.Y(r, k).imag());
    write_row(out, row);
  }
}

SpectralDataset read_dataset(const std::filesystem::path& manifest) {
  auto in = open_in(manifest);
  const json j = parse_json(in);
  if (!j.is_object()) throw FormatError("manifest must hold a JSON object");
  const Eigen::Index nu = positive_int(j, "n_u");
  const Eigen::Index ny = positive_int(j, "n_y");
  if (!j.contains("experiments") || !j.at("experiments").is_array() ||
      j.at("experiments").empty()) {
    throw FormatError("manifest needs a non-empty \"experiments\" array");
  }
  std::vector<SpectralDataset> parts;
  for (const auto& entry : j.at("experiments")) {
    if (!entry.is_string()) throw FormatError("experiment paths must be strings");
    const std::filesystem::path file =
        manifest.parent_path() / entry.get<std::string>();
    auto csv = open_in(file);
    try {
      parts.push_back(parse_experiment(csv, nu, ny));
    } catch (const FormatError& e) {
      throw FormatError(file.string() + ": " + e.what());
    }
  }
  return validated("dataset", [&] { return merge_datasets(parts); });
}

void write_dataset(const std::filesystem::path& manifest,
                   const SpectralDataset& data) {
  const std::string stem = manifest.stem().string();
  json j;
  j["n_u"] = data.n_u();
  j["n_y"] = data.n_y();
  j["experiments"] = json::array();
  for (Eigen::Index i = 0; i < data.num_experiments(); ++i) {
    const std::string name = stem + "_exp" + std::to_string(i + 1) + ".csv";
    auto out = open_out(manifest.parent_path() / name);
    write_experiment(out, data.omegas(),
                     data.experiment(static_cast<std::size_t>(i)));
    j["experiments"].push_back(name);
  }
  auto out = open_out(manifest);
  out << j.dump(2) << '\n';
}

// ---- trajectory files ------------------------------------------------------

TimeTrajectory parse_trajectory(std::istream& in) {
  const CsvTable t = read_csv(in);
  if (t.header.empty() || t.header.front() != "k") {
    throw FormatError("trajectory header must start with k");
  }
  Eigen::Index nu = 0;
  Eigen::Index ny = 0;
  for (std::size_t c = 1; c < t.header.size(); ++c) {
    if (t.header[c].rfind("u_", 0) == 0) ++nu;
    else if (t.header[c].rfind("y_", 0) == 0) ++ny;
  }
  expect_header(t.header, trajectory_header(nu, ny));
  const auto n = static_cast<Eigen::Index>(t.rows.size());
  if (n < 1) throw FormatError("trajectory file has no samples");
  Eigen::MatrixXd u(nu, n);
  Eigen::MatrixXd y(ny, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto& row = t.rows[static_cast<std::size_t>(k)];
    if (row[0] != std::floor(row[0]) ||
        (k > 0 && row[0] != t.rows[static_cast<std::size_t>(k - 1)][0] + 1)) {
      throw FormatError("trajectory index k must be consecutive integers");
    }
    for (Eigen::Index r = 0; r < nu; ++r) u(r, k) = row[1 + r];
    for (Eigen::Index r = 0; r < ny; ++r) y(r, k) = row[1 + nu + r];
  }
  return validated("trajectory", [&] { return TimeTrajectory(u, y); });
}

TimeTrajectory read_trajectory(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_trajectory(in);
}

void write_trajectory(std::ostream& out, const TimeTrajectory& trajectory,
                      Eigen::Index first_index) {
  write_header(out, trajectory_header(trajectory.n_u(), trajectory.n_y()));
  for (Eigen::Index k = 0; k < trajectory.length(); ++k) {
    out << first_index + k;
    for (Eigen::Index r = 0; r < trajectory.n_u(); ++r) {
      out << ',' << format_double(trajectory.u()(r, k));
    }
    for (Eigen::Index r = 0; r < trajectory.n_y(); ++r) {
      out << ',' << format_double(trajectory.y()(r, k));
    }
    out << '\n';
  }
}

void write_trajectory(const std::filesystem::path& path,
                      const TimeTrajectory& trajectory,
                      Eigen::Index first_index) {
  auto out = open_out(path);
  write_trajectory(out, trajectory, first_index);
}

Eigen::MatrixXd read_inputs(const std::filesystem::path& path) {
  return read_trajectory(path).u();
}

void write_inputs(const std::filesystem::path& path, const Eigen::MatrixXd& u,
                  Eigen::Index first_index) {
  write_trajectory(path, TimeTrajectory(u, Eigen::MatrixXd(0, u.cols())),
                   first_index);
}

}  // namespace fwfl
