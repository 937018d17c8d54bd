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
#include <vector>

#include "dipmsc/series.hpp"

namespace dipmsc {

/// One cluster's representative shape: D unit-norm rows, sign-fixed so each
/// row sum is >= 0 (first significant entry positive on a zero sum).
struct Centroid {
  Eigen::MatrixXd shape;  // D x T
  int cluster_id = -1;
};

/// Member scatter matrix for one dimension:
///   sum over members of (I - y y^T / ||y||^2)
/// where y is the member's row d after shifting the member back by its
/// assignment-time delay (shifts[i] is the q_star reported by the distance).
/// Throws EmptyClusterError / DegenerateRowError.
Eigen::MatrixXd scatter_matrix(const std::vector<const MultiSeries*>& members,
                               Eigen::Index d, const std::vector<int>& shifts);

/// Unit-norm eigenvector of the smallest eigenvalue of a symmetric PSD
/// matrix, sign-fixed. Residual ||m v - lambda v|| <= 1e-8 ||m||_2 is
/// enforced (ConvergenceError otherwise). On a (near-)degenerate smallest
/// eigenspace the choice is deterministic: the normalized projection of the
/// first coordinate axis with a nonzero projection onto that eigenspace.
Eigen::VectorXd smallest_eigenvector(const Eigen::MatrixXd& m);

/// Per-dimension spectral centroid of the given members.
Centroid update_centroid(const std::vector<const MultiSeries*>& members,
                         const std::vector<int>& shifts);

/// Sign convention used for centroid rows: flips v so sum(v) >= 0; if the
/// sum is (numerically) zero the first entry with |v_i| > tol is made
/// positive.
void fix_sign(Eigen::Ref<Eigen::VectorXd> v);

}  // namespace dipmsc
