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
#include <utility>
#include <vector>

#include "dipmsc/mksc.hpp"

namespace dipmsc {

enum class SplitThresholdKind { kRatio, kCount };

struct DipmConfig {
  double alpha = 0.05;       // dip-test significance
  double v = 0.01;           // split threshold (ratio or count, per kind)
  SplitThresholdKind threshold_kind = SplitThresholdKind::kRatio;
  int q_max = 24;
  int b = 1000;              // bootstrap replicates
  int local_runs = 10;       // k=2 local searches per split
  int max_iters = 100;
  std::uint64_t seed = 0;
  int max_clusters = 0;      // 0: min(N/5, 50), at least 1
  int threads = 1;
};

struct SplitEvent {
  int round = 0;
  int cluster = 0;
  double score = 0.0;
  int k_after = 0;
  double objective_after = 0.0;

  bool operator==(const SplitEvent&) const = default;
};

struct DipmResult {
  ClusteringResult clustering;
  int k_final = 1;
  std::vector<SplitEvent> split_history;
  bool cap_reached = false;
  std::vector<double> final_scores;  // splitter score per final cluster
};

/// Best k=2 split of a member subset: `local_runs` seeded m-kSC runs, the
/// centroid pair of the lowest-objective run wins.
/// Throws SplitError if no run yields two non-empty clusters.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> split_cluster(const SeriesTensor& members,
                                                          const DipmConfig& config,
                                                          std::uint64_t salt = 0);

/// The full driver: precomputes the pairwise distance matrix once, starts
/// from one cluster, and repeatedly splits the cluster with the highest
/// splitter score (if above the threshold), re-running m-kSC globally with
/// the split centroids installed, until every score is within the threshold
/// or the cluster cap is reached.
DipmResult dipm_sc(const SeriesTensor& tensor, const DipmConfig& config);

}  // namespace dipmsc
