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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dipmsc/dipmsc.hpp"
#include "dipmsc/metrics.hpp"
#include "dipmsc/series.hpp"

namespace dipmsc {

/// Serializable clustering output: one entry per cluster plus run metadata.
/// Reports with the same inputs serialize byte-identically; wall-clock
/// timing is only attached on request.
struct ClusteringReport {
  static constexpr int kSchema = 1;

  struct ClusterEntry {
    int id = 0;
    std::vector<std::vector<double>> centroid;  // D rows x T
    std::vector<std::string> members;
    std::vector<int> shifts;                    // q per member
    std::vector<std::vector<double>> alphas;    // per member, D scales
    ClusterTemporalStats temporal;
    std::vector<double> cumulative_popularity;

    bool operator==(const ClusterEntry&) const = default;
  };

  std::map<std::string, std::string> config;  // flag echo, string-valued
  std::string mode;
  int k_final = 1;
  double objective = 0.0;
  int iterations = 0;
  bool converged = false;
  bool cap_reached = false;
  std::vector<SplitEvent> split_history;
  std::vector<ClusterEntry> clusters;
  std::optional<double> wall_seconds;

  bool operator==(const ClusteringReport&) const = default;
};

/// Assembles the report from a finished run; metrics (burstiness, memory,
/// cumulative popularity) are computed on the raw tensor.
ClusteringReport build_report(const SeriesTensor& raw, const ClusteringResult& clustering,
                              int k_final, const std::vector<SplitEvent>& split_history,
                              bool cap_reached, Eigen::Index metrics_dimension, int lag,
                              const std::map<std::string, std::string>& config_echo,
                              const std::string& mode);

std::string report_to_json(const ClusteringReport& report);
ClusteringReport report_from_json(const std::string& text);

void save_report(const ClusteringReport& report, const std::string& path);
ClusteringReport load_report(const std::string& path);

}  // namespace dipmsc
