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

#include "dipmsc/mksc.hpp"

#include <algorithm>
#include <limits>

#include "dipmsc/detail/parallel.hpp"
#include "dipmsc/detail/rng.hpp"

namespace dipmsc {

namespace {

struct AssignPass {
  std::vector<int> labels;
  std::vector<int> shifts;
  Eigen::MatrixXd alphas;
  std::vector<double> values;
};

AssignPass assign_pass(const SeriesTensor& tensor, const std::vector<Centroid>& centroids,
                       int q_max, int threads) {
  const std::size_t N = tensor.entity_count();
  const auto D = tensor.dims();
  AssignPass pass;
  pass.labels.resize(N);
  pass.shifts.resize(N);
  pass.alphas.resize(static_cast<Eigen::Index>(N), D);
  pass.values.resize(N);
  detail::parallel_for(N, threads, [&](std::size_t n) {
    double best = std::numeric_limits<double>::infinity();
    int best_k = 0;
    DistanceResult best_res;
    for (std::size_t k = 0; k < centroids.size(); ++k) {
      DistanceResult r = distance(centroids[k].shape, tensor.entity(n), {q_max});
      if (r.value < best) {
        best = r.value;
        best_k = static_cast<int>(k);
        best_res = std::move(r);
      }
    }
    pass.labels[n] = best_k;
    pass.shifts[n] = best_res.q_star;
    pass.alphas.row(static_cast<Eigen::Index>(n)) = best_res.alphas.transpose();
    pass.values[n] = best;
  });
  return pass;
}

std::vector<Centroid> update_centroids(const SeriesTensor& tensor,
                                       const std::vector<int>& labels,
                                       const std::vector<int>& shifts, int k, int threads) {
  std::vector<std::vector<const MultiSeries*>> members(static_cast<std::size_t>(k));
  std::vector<std::vector<int>> member_shifts(static_cast<std::size_t>(k));
  for (std::size_t n = 0; n < labels.size(); ++n) {
    members[static_cast<std::size_t>(labels[n])].push_back(&tensor.entity(n));
    member_shifts[static_cast<std::size_t>(labels[n])].push_back(shifts[n]);
  }
  std::vector<Centroid> centroids(static_cast<std::size_t>(k));
  detail::parallel_for(static_cast<std::size_t>(k), threads, [&](std::size_t c) {
    if (members[c].empty()) {
      throw EmptyClusterError("update: cluster " + std::to_string(c) + " has no members");
    }
    centroids[c] = update_centroid(members[c], member_shifts[c]);
    centroids[c].cluster_id = static_cast<int>(c);
  });
  return centroids;
}

// Moves the entity farthest from its own centroid into each empty cluster,
// then refreshes that entity's distance record against its new centroid.
void repair_empty_clusters(const SeriesTensor& tensor,
                           const std::vector<Centroid>& centroids, int q_max,
                           AssignPass& pass) {
  const int k = static_cast<int>(centroids.size());
  std::vector<int> sizes(static_cast<std::size_t>(k), 0);
  for (int label : pass.labels) ++sizes[static_cast<std::size_t>(label)];
  for (int c = 0; c < k; ++c) {
    if (sizes[static_cast<std::size_t>(c)] > 0) continue;
    std::size_t worst = 0;
    double worst_value = -1.0;
    for (std::size_t n = 0; n < pass.labels.size(); ++n) {
      if (sizes[static_cast<std::size_t>(pass.labels[n])] < 2) continue;
      if (pass.values[n] > worst_value) {
        worst_value = pass.values[n];
        worst = n;
      }
    }
    if (worst_value < 0.0) {
      throw EmptyClusterError("repair: no donor entity for empty cluster " +
                              std::to_string(c));
    }
    --sizes[static_cast<std::size_t>(pass.labels[worst])];
    pass.labels[worst] = c;
    ++sizes[static_cast<std::size_t>(c)];
    DistanceResult r = distance(centroids[static_cast<std::size_t>(c)].shape,
                                tensor.entity(worst), {q_max});
    pass.shifts[worst] = r.q_star;
    pass.alphas.row(static_cast<Eigen::Index>(worst)) = r.alphas.transpose();
    pass.values[worst] = r.value;
  }
}

double sum_squares(const std::vector<double>& values) {
  double s = 0.0;
  for (double v : values) s += v * v;
  return s;
}

}  // namespace

ClusteringResult m_ksc(const SeriesTensor& tensor, const ClusteringConfig& config,
                       const std::optional<std::vector<Eigen::MatrixXd>>& init_centroids) {
  const std::size_t N = tensor.entity_count();
  if (config.k < 1) throw ConfigError("m_ksc: k must be >= 1");
  if (static_cast<std::size_t>(config.k) > N) {
    throw ConfigError("m_ksc: k=" + std::to_string(config.k) + " exceeds N=" +
                      std::to_string(N));
  }
  if (config.max_iters < 1) throw ConfigError("m_ksc: max_iters must be >= 1");
  if (config.q_max < 0 || config.q_max >= tensor.steps()) {
    throw ConfigError("m_ksc: q_max must be in [0, T)");
  }
  if (config.init == InitMode::kProvidedCentroids &&
      (!init_centroids || static_cast<int>(init_centroids->size()) != config.k)) {
    throw ConfigError("m_ksc: provided-centroids init needs k centroid shapes");
  }

  ClusteringResult result;
  std::vector<int> labels(N, 0);
  std::vector<int> shifts(N, 0);
  Eigen::MatrixXd alphas = Eigen::MatrixXd::Ones(static_cast<Eigen::Index>(N), tensor.dims());
  std::vector<double> values(N, 0.0);
  std::vector<Centroid> centroids;

  if (config.init == InitMode::kProvidedCentroids) {
    centroids.resize(static_cast<std::size_t>(config.k));
    for (int c = 0; c < config.k; ++c) {
      centroids[static_cast<std::size_t>(c)].shape =
          (*init_centroids)[static_cast<std::size_t>(c)];
      centroids[static_cast<std::size_t>(c)].cluster_id = c;
    }
    AssignPass pass = assign_pass(tensor, centroids, config.q_max, config.threads);
    repair_empty_clusters(tensor, centroids, config.q_max, pass);
    labels = std::move(pass.labels);
    shifts = std::move(pass.shifts);
    alphas = std::move(pass.alphas);
    values = std::move(pass.values);
  } else {
    detail::Rng rng(detail::mix_seed(config.seed, 0x6d6b7363ULL));
    const auto k = static_cast<std::uint64_t>(config.k);
    bool ok = false;
    for (int attempt = 0; attempt < 10000 && !ok; ++attempt) {
      std::vector<int> sizes(static_cast<std::size_t>(config.k), 0);
      for (auto& label : labels) {
        label = static_cast<int>(rng.below(k));
        ++sizes[static_cast<std::size_t>(label)];
      }
      ok = std::all_of(sizes.begin(), sizes.end(), [](int s) { return s > 0; });
    }
    if (!ok) {
      // k close to N starves uniform resampling; assign one seeded entity
      // per cluster and draw the rest uniformly
      std::vector<std::size_t> order(N);
      for (std::size_t i = 0; i < N; ++i) order[i] = i;
      for (std::size_t i = N; i > 1; --i) {
        std::swap(order[i - 1], order[rng.below(i)]);
      }
      for (std::size_t i = 0; i < N; ++i) {
        labels[order[i]] = i < static_cast<std::size_t>(config.k)
                               ? static_cast<int>(i)
                               : static_cast<int>(rng.below(k));
      }
    }
  }

  for (int iter = 1; iter <= config.max_iters; ++iter) {
    centroids = update_centroids(tensor, labels, shifts, config.k, config.threads);
    AssignPass pass = assign_pass(tensor, centroids, config.q_max, config.threads);
    repair_empty_clusters(tensor, centroids, config.q_max, pass);
    result.iterations = iter;
    result.objective_history.push_back(sum_squares(pass.values));
    const bool stable = pass.labels == labels;
    labels = std::move(pass.labels);
    shifts = std::move(pass.shifts);
    alphas = std::move(pass.alphas);
    values = std::move(pass.values);
    if (stable) {
      result.converged = true;
      break;
    }
  }

  result.centroids = std::move(centroids);
  result.assignment.cluster_of = std::move(labels);
  result.assignment.q_of = std::move(shifts);
  result.assignment.alpha_of = std::move(alphas);
  result.entity_distances = values;
  result.objective = sum_squares(values);
  return result;
}

double objective(const SeriesTensor& tensor, const std::vector<Centroid>& centroids,
                 const std::vector<int>& cluster_of, int q_max, int threads) {
  if (cluster_of.size() != tensor.entity_count()) {
    throw ShapeError("objective: one label per entity required");
  }
  std::vector<double> values(tensor.entity_count());
  detail::parallel_for(tensor.entity_count(), threads, [&](std::size_t n) {
    const int k = cluster_of[n];
    if (k < 0 || static_cast<std::size_t>(k) >= centroids.size()) {
      throw ShapeError("objective: label out of range");
    }
    values[n] = distance(centroids[static_cast<std::size_t>(k)].shape, tensor.entity(n),
                         {q_max}).value;
  });
  return sum_squares(values);
}

}  // namespace dipmsc
