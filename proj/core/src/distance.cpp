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

#include "dipmsc/distance.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "dipmsc/detail/parallel.hpp"

namespace dipmsc {

MultiSeries shift(const MultiSeries& x, int q) {
  const Eigen::Index T = x.steps();
  if (std::abs(static_cast<long>(q)) >= T) {
    throw ShiftError("shift " + std::to_string(q) + " out of range for T=" + std::to_string(T));
  }
  MultiSeries out;
  out.values = Eigen::MatrixXd::Zero(x.dims(), T);
  if (q >= 0) {
    out.values.rightCols(T - q) = x.values.leftCols(T - q);
  } else {
    out.values.leftCols(T + q) = x.values.rightCols(T + q);
  }
  return out;
}

double optimal_alpha(const Eigen::Ref<const Eigen::VectorXd>& x_q_row,
                     const Eigen::Ref<const Eigen::VectorXd>& c_row) {
  const double denom = x_q_row.squaredNorm();
  if (denom == 0.0) throw DegenerateEntityError("optimal_alpha: zero series row");
  return x_q_row.dot(c_row) / denom;
}

namespace {

// Mean norm-ratio cost at a fixed aligned candidate; nullopt if some row of
// the shifted series is all zero (alpha undefined there).
std::optional<double> cost_at(const Eigen::MatrixXd& c, const Eigen::MatrixXd& aligned,
                              const Eigen::VectorXd& c_norms, Eigen::VectorXd* alphas) {
  const Eigen::Index D = c.rows();
  double sum = 0.0;
  for (Eigen::Index d = 0; d < D; ++d) {
    const double xsq = aligned.row(d).squaredNorm();
    if (xsq == 0.0) return std::nullopt;
    const double a = aligned.row(d).dot(c.row(d)) / xsq;
    sum += (c.row(d) - a * aligned.row(d)).norm() / c_norms(d);
    if (alphas) (*alphas)(d) = a;
  }
  return sum / static_cast<double>(D);
}

}  // namespace

DistanceResult distance(const Eigen::MatrixXd& centroid, const MultiSeries& x,
                        ShiftBound bound) {
  const Eigen::Index D = centroid.rows();
  const Eigen::Index T = centroid.cols();
  if (x.dims() != D || x.steps() != T) {
    throw ShapeError("distance: shape mismatch " + std::to_string(x.dims()) + "x" +
                     std::to_string(x.steps()) + " vs " + std::to_string(D) + "x" +
                     std::to_string(T));
  }
  if (bound.q_max < 0 || bound.q_max >= T) {
    throw ShiftError("distance: q_max must be in [0, T)");
  }
  Eigen::VectorXd c_norms(D);
  for (Eigen::Index d = 0; d < D; ++d) {
    c_norms(d) = centroid.row(d).norm();
    if (c_norms(d) == 0.0) {
      throw DegenerateRowError("distance: centroid row " + std::to_string(d) + " is zero");
    }
  }

  DistanceResult best;
  best.value = std::numeric_limits<double>::infinity();
  best.alphas.resize(D);
  Eigen::VectorXd alphas(D);
  bool any = false;
  // scan order fixes tie-breaking: smaller |q| first, negative before positive
  for (int a = 0; a <= bound.q_max; ++a) {
    for (int sgn = 0; sgn < 2; ++sgn) {
      if (a == 0 && sgn == 1) continue;
      const int q = sgn == 0 ? -a : a;
      // q_star is the delay of x relative to c, so the candidate alignment
      // shifts x back by q.
      const MultiSeries aligned = shift(x, -q);
      const auto cost = cost_at(centroid, aligned.values, c_norms, &alphas);
      if (!cost) continue;
      any = true;
      if (*cost < best.value) {
        best.value = *cost;
        best.q_star = q;
        best.alphas = alphas;
      }
    }
  }
  if (!any) {
    throw DegenerateRowError("distance: every scanned shift zeroes out a dimension row");
  }
  return best;
}

Eigen::MatrixXd pairwise_distance_matrix(const SeriesTensor& tensor, ShiftBound bound,
                                         int threads) {
  const std::size_t N = tensor.entity_count();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(N),
                                              static_cast<Eigen::Index>(N));
  detail::parallel_for(N, threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j) continue;
      try {
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            distance(tensor.entity(i).values, tensor.entity(j), bound).value;
      } catch (const Error& e) {
        throw DegenerateRowError("pairwise (" + tensor.entity_ids()[i] + "," +
                                 tensor.entity_ids()[j] + "): " + e.what());
      }
    }
  });
  return out;
}

}  // namespace dipmsc
