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
#include "fwfl/freq_domain.hpp"

#include <complex>
#include <string>

#include "fwfl/errors.hpp"
#include "fwfl/linalg.hpp"
#include "fwfl/lti.hpp"

namespace fwfl {
namespace {

using cd = std::complex<double>;

void check_sequences(std::span<const Eigen::MatrixXcd> sequences,
                     const Eigen::VectorXd& omegas) {
  if (sequences.empty()) throw ArgumentError("empty sequence collection");
  for (const auto& s : sequences) {
    if (s.rows() != sequences.front().rows() || s.cols() != omegas.size()) {
      throw DimensionError(
          "every sequence needs n_v x M samples matching the frequency grid");
    }
  }
}

void check_order(Eigen::Index order) {
  if (order < 1) throw ArgumentError("order must be at least 1");
}

}  // namespace

Eigen::VectorXcd w_vector(double omega, Eigen::Index depth) {
  if (depth < 1) throw ArgumentError("depth must be at least 1");
  Eigen::VectorXcd w(depth);
  for (Eigen::Index k = 0; k < depth; ++k) {
    w(k) = std::polar(1.0, omega * static_cast<double>(k));
  }
  return w;
}

Eigen::MatrixXcd f_matrix(const Eigen::MatrixXcd& samples,
                          const Eigen::VectorXd& omegas, Eigen::Index depth) {
  if (samples.cols() != omegas.size()) {
    throw DimensionError("sample count " + std::to_string(samples.cols()) +
                         " differs from frequency count " +
                         std::to_string(omegas.size()));
  }
  const Eigen::Index nv = samples.rows();
  Eigen::MatrixXcd f(nv * depth, samples.cols());
  for (Eigen::Index m = 0; m < samples.cols(); ++m) {
    const Eigen::VectorXcd w = w_vector(omegas(m), depth);
    for (Eigen::Index k = 0; k < depth; ++k) {
      f.col(m).segment(k * nv, nv) = w(k) * samples.col(m);
    }
  }
  return f;
}

Eigen::MatrixXd cpe_gram(std::span<const Eigen::MatrixXcd> sequences,
                         const Eigen::VectorXd& omegas, Eigen::Index order) {
  check_sequences(sequences, omegas);
  check_order(order);
  const Eigen::Index nv = sequences.front().rows();
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(nv * order, nv * order);
  for (Eigen::Index m = 0; m < omegas.size(); ++m) {
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(nv, nv);
    for (const auto& v : sequences) {
      s.noalias() += v.col(m) * v.col(m).adjoint();
    }
    const Eigen::VectorXcd w = w_vector(omegas(m), order);
    for (Eigen::Index a = 0; a < order; ++a) {
      for (Eigen::Index b = 0; b < order; ++b) {
        const cd wab = w(a) * std::conj(w(b));
        gram.block(a * nv, b * nv, nv, nv) += (wab * s).real();
      }
    }
  }
  return 0.5 * (gram + gram.transpose());
}

Eigen::MatrixXd fd_cpe_gram(const SpectralDataset& data, Eigen::Index order) {
  return cpe_gram(data.inputs(), data.omegas(), order);
}

Eigen::MatrixXcd conjugate_extended_matrix(
    std::span<const Eigen::MatrixXcd> sequences, const Eigen::VectorXd& omegas,
    Eigen::Index order) {
  check_sequences(sequences, omegas);
  check_order(order);
  const Eigen::Index nv = sequences.front().rows();
  const Eigen::Index m = omegas.size();
  const auto q = static_cast<Eigen::Index>(sequences.size());
  Eigen::MatrixXcd out(nv * order, 2 * m * q);
  for (Eigen::Index i = 0; i < q; ++i) {
    const Eigen::MatrixXcd f = f_matrix(sequences[i], omegas, order);
    out.middleCols(i * m, m) = f;
    out.middleCols((q + i) * m, m) = f.conjugate();
  }
  return out;
}

FdCpeReport cpe_check(std::span<const Eigen::MatrixXcd> sequences,
                      const Eigen::VectorXd& omegas, Eigen::Index order,
                      const Tolerances& tol) {
  const Eigen::MatrixXd gram = cpe_gram(sequences, omegas, order);
  const Eigen::Index nv = sequences.front().rows();
  const auto q = static_cast<Eigen::Index>(sequences.size());

  FdCpeReport r;
  r.required_rank = nv * order;
  r.columns = 2 * omegas.size() * q;
  r.counting_feasible = r.columns >= r.required_rank;
  Eigen::Index zero_frequencies = 0;
  for (Eigen::Index m = 0; m < omegas.size(); ++m) {
    if (omegas(m) == 0.0) ++zero_frequencies;
  }
  r.attainable_rank = q * (2 * omegas.size() - zero_frequencies);

  r.min_eigenvalue = linalg::min_eigenvalue(gram);
  r.pd_threshold = tol.pd_threshold(gram);
  r.gram_positive_definite = r.min_eigenvalue > r.pd_threshold;

  r.rank = linalg::numerical_rank(
      conjugate_extended_matrix(sequences, omegas, order), tol);
  r.is_cpe = r.rank == r.required_rank;
  return r;
}

FdCpeReport fd_cpe_check(const SpectralDataset& data, Eigen::Index order,
                         const Tolerances& tol) {
  return cpe_check(data.inputs(), data.omegas(), order, tol);
}

void require_cpe(const SpectralDataset& data, Eigen::Index order,
                 const Tolerances& tol) {
  const FdCpeReport r = fd_cpe_check(data, order, tol);
  if (r.is_cpe) return;
  std::string msg = "input spectra are not CPE of order " +
                    std::to_string(order) + ": rank " + std::to_string(r.rank) +
                    " of " + std::to_string(r.required_rank) +
                    " (attainable rank with this grid is at most " +
                    std::to_string(r.attainable_rank) + ", 2MQ = " +
                    std::to_string(r.columns) + ")";
  throw CpeHypothesisError(msg);
}

Eigen::MatrixXd lambda_matrix(const StateSpaceModel& model,
                              const SpectralDataset& data, Eigen::Index depth,
                              const Tolerances& tol) {
  check_order(depth);
  if (model.n_u() != data.n_u()) {
    throw DimensionError("model and dataset disagree on n_u");
  }
  const Eigen::Index nx = model.n_x();
  const Eigen::Index nu = model.n_u();
  const Eigen::Index m_count = data.num_frequencies();
  Eigen::MatrixXcd z(nx + depth * nu, m_count * data.num_experiments());
  Eigen::Index col = 0;
  for (const auto& e : data.experiments()) {
    const Eigen::MatrixXcd fu = f_matrix(e.U, data.omegas(), depth);
    for (Eigen::Index m = 0; m < m_count; ++m, ++col) {
      z.col(col).head(nx) =
          evaluate_spectrum(model, data.omegas()(m), e.U.col(m), tol).X;
      z.col(col).tail(depth * nu) = fu.col(m);
    }
  }
  const Eigen::MatrixXd lambda = (z * z.adjoint()).real();
  return 0.5 * (lambda + lambda.transpose());
}

Eigen::Index GammaStack::full_index(const GammaColumn& column) const {
  const Eigen::Index mq = num_frequencies * num_experiments;
  const Eigen::Index part = column.part == GammaColumn::Part::Real ? 0 : 1;
  return part * mq + column.experiment * num_frequencies + column.frequency;
}

Eigen::VectorXd GammaStack::expand(const Eigen::VectorXd& g) const {
  if (g.size() != static_cast<Eigen::Index>(column_map.size())) {
    throw DimensionError("coefficient vector does not match the Gamma stack");
  }
  Eigen::VectorXd full = Eigen::VectorXd::Zero(full_columns);
  for (std::size_t c = 0; c < column_map.size(); ++c) {
    full(full_index(column_map[c])) = g(static_cast<Eigen::Index>(c));
  }
  return full;
}

GammaStack gamma_stack(const SpectralDataset& data, Eigen::Index depth,
                       const GammaOptions& options) {
  check_order(depth);
  const Eigen::Index m = data.num_frequencies();
  const Eigen::Index q = data.num_experiments();
  const Eigen::Index nu = data.n_u();
  const Eigen::Index ny = data.n_y();

  Eigen::MatrixXd gu(depth * nu, 2 * m * q);
  Eigen::MatrixXd gy(depth * ny, 2 * m * q);
  for (Eigen::Index i = 0; i < q; ++i) {
    const auto& e = data.experiment(static_cast<std::size_t>(i));
    const Eigen::MatrixXcd fu = f_matrix(e.U, data.omegas(), depth);
    const Eigen::MatrixXcd fy = f_matrix(e.Y, data.omegas(), depth);
    gu.middleCols(i * m, m) = fu.real();
    gu.middleCols((q + i) * m, m) = fu.imag();
    gy.middleCols(i * m, m) = fy.real();
    gy.middleCols((q + i) * m, m) = fy.imag();
  }

  GammaStack out;
  out.depth = depth;
  out.full_columns = 2 * m * q;
  out.num_frequencies = m;
  out.num_experiments = q;

  std::vector<Eigen::Index> keep;
  for (Eigen::Index c = 0; c < 2 * m * q; ++c) {
    GammaColumn tag;
    tag.part = c < m * q ? GammaColumn::Part::Real : GammaColumn::Part::Imag;
    tag.experiment = (c % (m * q)) / m;
    tag.frequency = c % m;
    const bool zero = gu.col(c).isZero(0.0) && gy.col(c).isZero(0.0);
    if (options.prune_zero_columns && zero) continue;
    keep.push_back(c);
    out.column_map.push_back(tag);
  }
  if (static_cast<Eigen::Index>(keep.size()) == 2 * m * q) {
    out.gamma_u = std::move(gu);
    out.gamma_y = std::move(gy);
  } else {
    out.gamma_u = gu(Eigen::all, keep);
    out.gamma_y = gy(Eigen::all, keep);
  }
  return out;
}

Eigen::VectorXcd complex_coefficients(const Eigen::VectorXd& g) {
  if (g.size() % 2 != 0) {
    throw DimensionError("real coefficient vector must have even length");
  }
  const Eigen::Index mq = g.size() / 2;
  Eigen::VectorXcd g_bar(mq);
  for (Eigen::Index k = 0; k < mq; ++k) g_bar(k) = cd(g(k), -g(mq + k));
  return g_bar;
}

Eigen::VectorXd real_coefficients(const Eigen::VectorXcd& g_bar) {
  Eigen::VectorXd g(2 * g_bar.size());
  g << g_bar.real(), -g_bar.imag();
  return g;
}

MembershipResult fd_wfl_membership(const SpectralDataset& data,
                                   const TimeTrajectory& candidate,
                                   Eigen::Index n_x_bound,
                                   const Tolerances& tol,
                                   const GammaOptions& options) {
  if (candidate.n_u() != data.n_u() || candidate.n_y() != data.n_y()) {
    throw DimensionError("candidate dimensions do not match the dataset");
  }
  if (n_x_bound < 0) throw ArgumentError("n_x bound must be non-negative");
  const Eigen::Index depth = candidate.length();
  require_cpe(data, depth + n_x_bound, tol);

  const GammaStack stack = gamma_stack(data, depth, options);
  Eigen::MatrixXd lhs(stack.gamma_u.rows() + stack.gamma_y.rows(),
                      stack.gamma_u.cols());
  lhs << stack.gamma_u, stack.gamma_y;
  const auto solution = linalg::min_norm_solve(lhs, candidate.stacked(), tol);

  MembershipResult out;
  out.residual = solution.relative_residual;
  out.is_member = out.residual <= tol.membership;
  if (out.is_member) out.g = stack.expand(solution.x);
  return out;
}

}  // namespace fwfl
