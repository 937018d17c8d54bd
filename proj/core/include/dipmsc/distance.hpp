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

#pragma once

#include <Eigen/Core>

#include "dipmsc/series.hpp"

namespace dipmsc {

/// Maximum absolute time shift scanned by the distance.
struct ShiftBound {
  int q_max = 0;
};

/// Result of one shift/scale-invariant distance evaluation.
/// `q_star` is the delay of x relative to the centroid: for
/// x = shift(c, q0) the distance reports q_star == q0 and value 0.
struct DistanceResult {
  double value = 0.0;
  int q_star = 0;
  Eigen::VectorXd alphas;  // optimal per-dimension scale at q_star
};

/// Shifts all rows jointly by q steps, zero-filling vacated positions.
/// Positive q delays the signal (value at t moves to t+q).
/// Throws ShiftError if |q| >= T.
MultiSeries shift(const MultiSeries& x, int q);

/// Closed-form optimal scale (x_q . c) / ||x_q||^2 for one dimension row.
/// Throws DegenerateEntityError on a zero x row.
double optimal_alpha(const Eigen::Ref<const Eigen::VectorXd>& x_q_row,
                     const Eigen::Ref<const Eigen::VectorXd>& c_row);

/// Shift- and scale-invariant multivariate distance:
///   min over q in [-q_max, q_max] of (1/D) sum_d ||c_d - a_d x_q,d|| / ||c_d||
/// with the optimal alpha per dimension at each shift. The same q applies to
/// every dimension. Shifts that zero out any dimension row are skipped; ties
/// prefer smaller |q|, then negative q.
DistanceResult distance(const Eigen::MatrixXd& centroid, const MultiSeries& x,
                        ShiftBound bound);

/// Entry (i, j) = distance(entity i as centroid, entity j). Diagonal is 0.
/// Not symmetric in general: the norm in the denominator is the first
/// argument's. Parallel over rows; output independent of thread count.
Eigen::MatrixXd pairwise_distance_matrix(const SeriesTensor& tensor, ShiftBound bound,
                                         int threads = 1);

}  // namespace dipmsc
