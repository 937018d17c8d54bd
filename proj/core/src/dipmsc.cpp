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

#include "dipmsc/dipmsc.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "dipmsc/detail/rng.hpp"
#include "dipmsc/dip.hpp"

namespace dipmsc {

namespace {

void validate(const DipmConfig& c, std::size_t n) {
  if (!(c.alpha > 0.0 && c.alpha < 1.0)) throw ConfigError("dipm: alpha must be in (0,1)");
  if (c.threshold_kind == SplitThresholdKind::kRatio && !(c.v >= 0.0 && c.v <= 1.0)) {
    throw ConfigError("dipm: ratio threshold must be in [0,1]");
  }
  if (c.v < 0.0) throw ConfigError("dipm: threshold must be >= 0");
  if (c.b < 100) throw ConfigError("dipm: bootstrap count must be >= 100");
  if (c.local_runs < 1) throw ConfigError("dipm: local_runs must be >= 1");
  if (c.max_iters < 1) throw ConfigError("dipm: max_iters must be >= 1");
  if (n < 1) throw ConfigError("dipm: empty tensor");
}

int resolve_cap(const DipmConfig& c, std::size_t n) {
  if (c.max_clusters > 0) return c.max_clusters;
  const int cap = static_cast<int>(std::min<std::size_t>(n / 5, 50));
  return std::max(1, cap);
}

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& m, const std::vector<std::size_t>& idx) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(idx.size()),
                      static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          m(static_cast<Eigen::Index>(idx[i]), static_cast<Eigen::Index>(idx[j]));
    }
  }
  return out;
}

}  // namespace

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> split_cluster(const SeriesTensor& members,
                                                          const DipmConfig& config,
                                                          std::uint64_t salt) {
  if (members.entity_count() < 2) throw SplitError("split: need at least 2 members");
  double best_objective = std::numeric_limits<double>::infinity();
  std::pair<Eigen::MatrixXd, Eigen::MatrixXd> best;
  bool found = false;
  for (int run = 0; run < config.local_runs; ++run) {
    ClusteringConfig local;
    local.k = 2;
    local.q_max = config.q_max;
    local.max_iters = config.max_iters;
    local.seed = detail::mix_seed(config.seed, 0x73706c69ULL + salt,
                                  static_cast<std::uint64_t>(run));
    local.threads = config.threads;
    ClusteringResult r = m_ksc(members, local);
    std::array<int, 2> sizes = {0, 0};
    for (int label : r.assignment.cluster_of) ++sizes[static_cast<std::size_t>(label)];
    if (sizes[0] == 0 || sizes[1] == 0) continue;
    if (r.objective < best_objective) {
      best_objective = r.objective;
      best = {r.centroids[0].shape, r.centroids[1].shape};
      found = true;
    }
  }
  if (!found) throw SplitError("split: every local run collapsed to one cluster");
  return best;
}

DipmResult dipm_sc(const SeriesTensor& tensor, const DipmConfig& config) {
  const std::size_t N = tensor.entity_count();
  validate(config, N);
  const int cap = resolve_cap(config, N);

  const Eigen::MatrixXd dist = pairwise_distance_matrix(tensor, {config.q_max},
                                                        config.threads);

  ClusteringConfig base;
  base.q_max = config.q_max;
  base.max_iters = config.max_iters;
  base.threads = config.threads;
  base.seed = detail::mix_seed(config.seed, 0x64697061ULL);

  DipmResult result;
  base.k = 1;
  result.clustering = m_ksc(tensor, base);
  result.k_final = 1;

  for (int round = 1;; ++round) {
    const int K = result.k_final;
    std::vector<double> scores(static_cast<std::size_t>(K), 0.0);
    std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(K));
    for (std::size_t n = 0; n < N; ++n) {
      members[static_cast<std::size_t>(result.clustering.assignment.cluster_of[n])]
          .push_back(n);
    }
    for (int k = 0; k < K; ++k) {
      const auto& idx = members[static_cast<std::size_t>(k)];
      if (idx.size() < 5) continue;
      const double ratio = check_cluster_modality(
          submatrix(dist, idx), config.alpha, config.b,
          detail::mix_seed(config.seed, static_cast<std::uint64_t>(round),
                           static_cast<std::uint64_t>(k)),
          config.threads);
      scores[static_cast<std::size_t>(k)] =
          config.threshold_kind == SplitThresholdKind::kRatio
              ? ratio
              : ratio * static_cast<double>(idx.size());
    }
    result.final_scores = scores;

    int split_k = -1;
    double max_score = -1.0;
    for (int k = 0; k < K; ++k) {
      if (scores[static_cast<std::size_t>(k)] > max_score) {
        max_score = scores[static_cast<std::size_t>(k)];
        split_k = k;
      }
    }
    if (max_score <= config.v) break;
    if (K >= cap) {
      result.cap_reached = true;
      break;
    }

    const SeriesTensor slice = tensor.subset(members[static_cast<std::size_t>(split_k)]);
    auto [c1, c2] = split_cluster(slice, config, static_cast<std::uint64_t>(round));

    std::vector<Eigen::MatrixXd> seeds;
    seeds.reserve(static_cast<std::size_t>(K + 1));
    for (const auto& c : result.clustering.centroids) seeds.push_back(c.shape);
    seeds[static_cast<std::size_t>(split_k)] = c1;
    seeds.push_back(c2);

    ClusteringConfig next = base;
    next.k = K + 1;
    next.init = InitMode::kProvidedCentroids;
    result.clustering = m_ksc(tensor, next, seeds);
    result.k_final = K + 1;
    result.split_history.push_back(
        {round, split_k, max_score, result.k_final, result.clustering.objective});
  }
  return result;
}

}  // namespace dipmsc
