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

#include <cstdint>
#include <optional>
#include <vector>

#include "dipmsc/centroid.hpp"
#include "dipmsc/distance.hpp"
#include "dipmsc/series.hpp"

namespace dipmsc {

/// Per-entity cluster membership with the shift/scale data recorded at
/// assignment time. alpha_of(n, d) is the optimal per-dimension scale and
/// q_of[n] the optimal delay from the entity's winning distance evaluation.
struct Assignment {
  std::vector<int> cluster_of;
  std::vector<int> q_of;
  Eigen::MatrixXd alpha_of;  // N x D
};

enum class InitMode { kRandomAssignment, kProvidedCentroids };

struct ClusteringConfig {
  int k = 1;
  int q_max = 0;
  int max_iters = 100;
  std::uint64_t seed = 0;
  InitMode init = InitMode::kRandomAssignment;
  int threads = 1;
};

struct ClusteringResult {
  std::vector<Centroid> centroids;
  Assignment assignment;
  double objective = 0.0;  // sum of squared distances to own centroid
  int iterations = 0;
  bool converged = false;
  std::vector<double> objective_history;       // after each assignment pass
  std::vector<double> entity_distances;        // to own centroid, per entity
};

/// Alternating shape clustering: spectral centroid update from the current
/// members (shifted back by their recorded delays), then nearest-centroid
/// assignment under the multivariate distance, until the partition repeats.
/// Random init draws uniform labels (resampled while any cluster is empty);
/// provided-centroids init assigns once from the given shapes before the
/// first update. Emptied clusters are repaired by moving in the entity
/// farthest from its own centroid. Deterministic for a fixed seed.
ClusteringResult m_ksc(const SeriesTensor& tensor, const ClusteringConfig& config,
                       const std::optional<std::vector<Eigen::MatrixXd>>& init_centroids =
                           std::nullopt);

/// Fresh-evaluation objective: sum over entities of
/// distance(centroid of assigned cluster, entity)^2.
double objective(const SeriesTensor& tensor, const std::vector<Centroid>& centroids,
                 const std::vector<int>& cluster_of, int q_max, int threads = 1);

}  // namespace dipmsc
