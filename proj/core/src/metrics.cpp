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

#include "dipmsc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace dipmsc {

namespace {

struct Moments {
  double mean = 0.0;
  double sd = 0.0;  // population
};

Moments population_moments(const double* data, std::size_t count) {
  Moments m;
  for (std::size_t i = 0; i < count; ++i) m.mean += data[i];
  m.mean /= static_cast<double>(count);
  double ss = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double d = data[i] - m.mean;
    ss += d * d;
  }
  m.sd = std::sqrt(ss / static_cast<double>(count));
  return m;
}

// Survival function of the Kolmogorov distribution,
// Q(z) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 z^2).
double kolmogorov_sf(double z) {
  if (z <= 0.0) return 1.0;
  double sum = 0.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = std::exp(-2.0 * j * j * z * z);
    sum += (j % 2 == 1) ? term : -term;
    if (term < 1e-18) break;
  }
  return std::min(1.0, std::max(0.0, 2.0 * sum));
}

double comb2(double x) { return x * (x - 1.0) / 2.0; }

}  // namespace

InterEventSample extract_events(const Eigen::Ref<const Eigen::VectorXd>& row,
                                std::optional<double> threshold) {
  if (row.size() < 2) throw SampleSizeError("extract_events: need T >= 2");
  const double thr = threshold.value_or(row.mean());
  std::vector<Eigen::Index> events;
  for (Eigen::Index t = 0; t < row.size(); ++t) {
    if (row(t) > thr) events.push_back(t);
  }
  if (events.size() < 2) {
    throw NoEventsError("extract_events: fewer than 2 bins above threshold");
  }
  InterEventSample out;
  out.taus.reserve(events.size() - 1);
  for (std::size_t i = 1; i < events.size(); ++i) {
    out.taus.push_back(static_cast<double>(events[i] - events[i - 1]));
  }
  return out;
}

double burstiness(const InterEventSample& sample) {
  if (sample.n_tau() < 2) throw SampleSizeError("burstiness: need >= 2 inter-event gaps");
  const Moments m = population_moments(sample.taus.data(), sample.taus.size());
  return (m.sd - m.mean) / (m.sd + m.mean);
}

double memory_coefficient(const InterEventSample& sample, int lag) {
  if (lag < 1) throw ConfigError("memory: lag must be >= 1");
  const std::size_t n = sample.n_tau();
  if (n < static_cast<std::size_t>(lag) + 2) {
    throw SampleSizeError("memory: need n_tau - lag >= 2");
  }
  const std::size_t terms = n - static_cast<std::size_t>(lag);
  const Moments lead = population_moments(sample.taus.data(), terms);
  const Moments lagged = population_moments(sample.taus.data() + lag, terms);
  if (lead.sd == 0.0 || lagged.sd == 0.0) {
    throw DegenerateSampleError("memory: constant subsequence");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < terms; ++i) {
    sum += (sample.taus[i] - lead.mean) *
           (sample.taus[i + static_cast<std::size_t>(lag)] - lagged.mean);
  }
  return sum / (static_cast<double>(n - 1) * lead.sd * lagged.sd);
}

std::vector<ClusterTemporalStats> cluster_burstiness_memory(
    const SeriesTensor& tensor, const std::vector<int>& cluster_of, int k,
    Eigen::Index dimension, int lag) {
  if (cluster_of.size() != tensor.entity_count()) {
    throw ShapeError("cluster_burstiness_memory: one label per entity required");
  }
  if (dimension < 0 || dimension >= tensor.dims()) {
    throw ShapeError("cluster_burstiness_memory: dimension out of range");
  }
  std::vector<ClusterTemporalStats> stats(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) stats[static_cast<std::size_t>(c)].cluster = c;
  std::vector<double> b_sum(static_cast<std::size_t>(k), 0.0);
  std::vector<double> m_sum(static_cast<std::size_t>(k), 0.0);
  for (std::size_t n = 0; n < tensor.entity_count(); ++n) {
    auto& st = stats[static_cast<std::size_t>(cluster_of[n])];
    ++st.members;
    InterEventSample sample;
    try {
      sample = extract_events(tensor.entity(n).values.row(dimension).transpose());
    } catch (const NoEventsError&) {
      ++st.no_events;
      continue;
    }
    try {
      b_sum[static_cast<std::size_t>(cluster_of[n])] += burstiness(sample);
      ++st.burstiness_count;
    } catch (const SampleSizeError&) {
    }
    try {
      const double m = memory_coefficient(sample, lag);
      m_sum[static_cast<std::size_t>(cluster_of[n])] += std::clamp(m, -1.0, 1.0);
      ++st.memory_count;
    } catch (const Error&) {
    }
  }
  for (int c = 0; c < k; ++c) {
    auto& st = stats[static_cast<std::size_t>(c)];
    if (st.burstiness_count > 0) {
      st.mean_burstiness = b_sum[static_cast<std::size_t>(c)] / st.burstiness_count;
    }
    if (st.memory_count > 0) {
      st.mean_memory = m_sum[static_cast<std::size_t>(c)] / st.memory_count;
    }
  }
  return stats;
}

std::vector<std::vector<double>> cumulative_popularity(const SeriesTensor& tensor,
                                                       const std::vector<int>& cluster_of,
                                                       int k, Eigen::Index dimension) {
  if (cluster_of.size() != tensor.entity_count()) {
    throw ShapeError("cumulative_popularity: one label per entity required");
  }
  if (dimension < 0 || dimension >= tensor.dims()) {
    throw ShapeError("cumulative_popularity: dimension out of range");
  }
  std::vector<std::vector<double>> totals(static_cast<std::size_t>(k));
  for (std::size_t n = 0; n < tensor.entity_count(); ++n) {
    totals[static_cast<std::size_t>(cluster_of[n])].push_back(
        tensor.entity(n).values.row(dimension).sum());
  }
  return totals;
}

std::pair<double, double> ks_two_sample(const std::vector<double>& a,
                                        const std::vector<double>& b) {
  if (a.empty() || b.empty()) throw EmptySampleError("ks_two_sample: empty sample");
  std::vector<double> sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < sa.size() && j < sb.size()) {
    const double x = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] == x) ++i;
    while (j < sb.size() && sb[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double ne = na * nb / (na + nb);
  return {d, kolmogorov_sf(std::sqrt(ne) * d)};
}

double tail_slope(const Eigen::Ref<const Eigen::VectorXd>& row, Eigen::Index peak_index,
                  Eigen::Index fit_horizon) {
  const Eigen::Index T = row.size();
  if (peak_index < 0 || peak_index + 2 > T) {
    throw WindowError("tail_slope: need peak_index + 2 <= T");
  }
  if (fit_horizon < 2) throw WindowError("tail_slope: horizon must be >= 2");
  const Eigen::Index end = std::min(T, peak_index + fit_horizon);
  const Eigen::Index m = end - peak_index;
  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  for (Eigen::Index t = peak_index; t < end; ++t) {
    st += static_cast<double>(t);
    sy += row(t);
    stt += static_cast<double>(t) * static_cast<double>(t);
    sty += static_cast<double>(t) * row(t);
  }
  const double denom = static_cast<double>(m) * stt - st * st;
  return (static_cast<double>(m) * sty - st * sy) / denom;
}

std::pair<double, double> partition_scores(const std::vector<int>& predicted,
                                           const std::vector<int>& truth) {
  if (predicted.size() != truth.size() || predicted.empty()) {
    throw ShapeError("partition_scores: label vectors must match and be non-empty");
  }
  const double n = static_cast<double>(predicted.size());
  std::map<int, double> pa, pb;
  std::map<std::pair<int, int>, double> joint;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    pa[predicted[i]] += 1.0;
    pb[truth[i]] += 1.0;
    joint[{predicted[i], truth[i]}] += 1.0;
  }

  double sum_comb_joint = 0.0, sum_comb_a = 0.0, sum_comb_b = 0.0;
  for (const auto& [key, c] : joint) sum_comb_joint += comb2(c);
  for (const auto& [key, c] : pa) sum_comb_a += comb2(c);
  for (const auto& [key, c] : pb) sum_comb_b += comb2(c);
  const double total_pairs = comb2(n);
  double ari = 1.0;
  if (total_pairs > 0.0) {
    const double expected = sum_comb_a * sum_comb_b / total_pairs;
    const double max_index = 0.5 * (sum_comb_a + sum_comb_b);
    ari = (max_index - expected) == 0.0
              ? (sum_comb_joint - expected == 0.0 ? 1.0 : 0.0)
              : (sum_comb_joint - expected) / (max_index - expected);
  }

  double ha = 0.0, hb = 0.0, mi = 0.0;
  for (const auto& [key, c] : pa) {
    const double p = c / n;
    ha -= p * std::log(p);
  }
  for (const auto& [key, c] : pb) {
    const double p = c / n;
    hb -= p * std::log(p);
  }
  for (const auto& [key, c] : joint) {
    const double pj = c / n;
    const double px = pa[key.first] / n;
    const double py = pb[key.second] / n;
    mi += pj * std::log(pj / (px * py));
  }
  const double denom = 0.5 * (ha + hb);
  double nmi = 1.0;
  if (denom > 0.0) {
    nmi = std::max(0.0, mi) / denom;
  } else {
    nmi = 1.0;  // both partitions are single clusters
  }
  return {ari, nmi};
}

}  // namespace dipmsc
