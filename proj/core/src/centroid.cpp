// Copyright 2026 The dipmsc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dipmsc/centroid.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "dipmsc/distance.hpp"

namespace dipmsc {

namespace {

constexpr double kSignTol = 1e-12;
// Above this size the dense solver gives way to shifted inverse iteration.
constexpr Eigen::Index kDenseLimit = 512;

Eigen::VectorXd smallest_by_inverse_iteration(const Eigen::MatrixXd& m) {
  const Eigen::Index T = m.rows();
  const double scale = m.norm();
  // small negative shift keeps the factorization definite for PSD input
  const double shift = -1e-8 * (scale > 0 ? scale : 1.0);
  Eigen::MatrixXd shifted = m;
  shifted.diagonal().array() -= shift;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(shifted);
  Eigen::VectorXd v = Eigen::VectorXd::Constant(T, 1.0 / std::sqrt(static_cast<double>(T)));
  double lambda = v.dot(m * v);
  for (int iter = 0; iter < 200; ++iter) {
    Eigen::VectorXd w = ldlt.solve(v);
    const double norm = w.norm();
    if (!(norm > 0.0) || !w.allFinite()) break;
    v = w / norm;
    lambda = v.dot(m * v);
    const double resid = (m * v - lambda * v).norm();
    if (resid <= 1e-10 * (scale > 0 ? scale : 1.0)) break;
  }
  return v;
}

}  // namespace

void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
  const double s = v.sum();
  if (s < -kSignTol) {
    v = -v;
    return;
  }
  if (s <= kSignTol) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (std::abs(v(i)) > kSignTol) {
        if (v(i) < 0.0) v = -v;
        return;
      }
    }
  }
}

Eigen::MatrixXd scatter_matrix(const std::vector<const MultiSeries*>& members,
                               Eigen::Index d, const std::vector<int>& shifts) {
  if (members.empty()) throw EmptyClusterError("scatter_matrix: no members");
  if (shifts.size() != members.size()) {
    throw ShapeError("scatter_matrix: one shift per member required");
  }
  const Eigen::Index T = members[0]->steps();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(T, T);
  m.diagonal().array() += static_cast<double>(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const MultiSeries aligned = shift(*members[i], -shifts[i]);
    const Eigen::VectorXd y = aligned.values.row(d).transpose();
    const double sq = y.squaredNorm();
    if (sq == 0.0) {
      throw DegenerateRowError("scatter_matrix: member " + std::to_string(i) +
                               " has zero row after alignment");
    }
    m.noalias() -= (y * y.transpose()) / sq;
  }
  return m;
}

Eigen::VectorXd smallest_eigenvector(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw ShapeError("smallest_eigenvector: square matrix required");
  }
  const Eigen::Index T = m.rows();
  Eigen::VectorXd v;
  double mnorm = 1.0;
  if (T <= kDenseLimit) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) {
      throw ConvergenceError("smallest_eigenvector: eigensolver failed");
    }
    const Eigen::VectorXd& evals = solver.eigenvalues();
    mnorm = std::max(std::abs(evals(0)), std::abs(evals(T - 1)));
    if (mnorm == 0.0) mnorm = 1.0;
    // group the (near-)degenerate smallest eigenspace
    const double gap_tol = 1e-9 * mnorm;
    Eigen::Index mult = 1;
    while (mult < T && evals(mult) - evals(0) <= gap_tol) ++mult;
    if (mult == 1) {
      v = solver.eigenvectors().col(0);
    } else {
      // deterministic representative: project the first coordinate axis
      // with a nonzero image into the eigenspace
      const auto basis = solver.eigenvectors().leftCols(mult);
      v = Eigen::VectorXd::Zero(T);
      for (Eigen::Index axis = 0; axis < T; ++axis) {
        Eigen::VectorXd proj = basis * (basis.transpose() * Eigen::VectorXd::Unit(T, axis));
        if (proj.norm() > 1e-9) {
          v = proj / proj.norm();
          break;
        }
      }
      if (v.norm() == 0.0) v = basis.col(0);
    }
  } else {
    v = smallest_by_inverse_iteration(m);
    mnorm = m.norm();
    if (mnorm == 0.0) mnorm = 1.0;
  }
  v.normalize();
  const double lambda = v.dot(m * v);
  const double resid = (m * v - lambda * v).norm();
  if (resid > 1e-8 * mnorm) {
    throw ConvergenceError("smallest_eigenvector: residual " + std::to_string(resid) +
                           " exceeds tolerance");
  }
  fix_sign(v);
  return v;
}

Centroid update_centroid(const std::vector<const MultiSeries*>& members,
                         const std::vector<int>& shifts) {
  if (members.empty()) throw EmptyClusterError("update_centroid: no members");
  const Eigen::Index D = members[0]->dims();
  const Eigen::Index T = members[0]->steps();
  Centroid c;
  c.shape.resize(D, T);
  for (Eigen::Index d = 0; d < D; ++d) {
    c.shape.row(d) = smallest_eigenvector(scatter_matrix(members, d, shifts)).transpose();
  }
  return c;
}

}  // namespace dipmsc
