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
#include <optional>
#include <utility>
#include <vector>

#include "dipmsc/series.hpp"

namespace dipmsc {

/// Gaps between consecutive events of an activity row, in time steps.
struct InterEventSample {
  std::vector<double> taus;
  std::size_t n_tau() const { return taus.size(); }
};

/// Events are time bins whose value strictly exceeds the threshold; with
/// `threshold` unset the row mean is used. Throws NoEventsError when fewer
/// than two bins qualify.
InterEventSample extract_events(const Eigen::Ref<const Eigen::VectorXd>& row,
                                std::optional<double> threshold = std::nullopt);

/// (sigma - m) / (sigma + m) over the inter-event gaps, population moments.
/// -1 for a perfectly periodic sequence, +1 in the extreme bursty limit.
double burstiness(const InterEventSample& sample);

/// Lagged correlation of inter-event gaps with subsequence moments and the
/// 1/(n_tau - 1) prefactor; clamped to [-1, 1] in aggregate reports.
/// Throws SampleSizeError / DegenerateSampleError.
double memory_coefficient(const InterEventSample& sample, int lag);

struct ClusterTemporalStats {
  int cluster = 0;
  int members = 0;
  int no_events = 0;             // members with < 2 events (excluded)
  int burstiness_count = 0;
  std::optional<double> mean_burstiness;
  int memory_count = 0;
  std::optional<double> mean_memory;  // clamped per-member to [-1, 1]

  bool operator==(const ClusterTemporalStats&) const = default;
};

/// Per-cluster mean burstiness and memory over members with enough events;
/// members that cannot produce a metric are excluded and counted.
std::vector<ClusterTemporalStats> cluster_burstiness_memory(
    const SeriesTensor& tensor, const std::vector<int>& cluster_of, int k,
    Eigen::Index dimension, int lag);

/// Per-cluster list of per-member totals sum_t values(n, d, t), raw series.
std::vector<std::vector<double>> cumulative_popularity(const SeriesTensor& tensor,
                                                       const std::vector<int>& cluster_of,
                                                       int k, Eigen::Index dimension);

/// Classical two-sample Kolmogorov-Smirnov test with the asymptotic p-value.
std::pair<double, double> ks_two_sample(const std::vector<double>& a,
                                        const std::vector<double>& b);

/// Least-squares slope of the row over [peak_index, peak_index + horizon).
double tail_slope(const Eigen::Ref<const Eigen::VectorXd>& row, Eigen::Index peak_index,
                  Eigen::Index fit_horizon);

/// (adjusted Rand index, normalized mutual information with arithmetic-mean
/// normalization) between two labelings of the same entities.
std::pair<double, double> partition_scores(const std::vector<int>& predicted,
                                           const std::vector<int>& truth);

}  // namespace dipmsc
