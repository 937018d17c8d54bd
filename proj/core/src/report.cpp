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

#include "dipmsc/report.hpp"

#include <fstream>

#include <json.hpp>

namespace dipmsc {

using nlohmann::ordered_json;

ClusteringReport build_report(const SeriesTensor& raw, const ClusteringResult& clustering,
                              int k_final, const std::vector<SplitEvent>& split_history,
                              bool cap_reached, Eigen::Index metrics_dimension, int lag,
                              const std::map<std::string, std::string>& config_echo,
                              const std::string& mode) {
  ClusteringReport report;
  report.config = config_echo;
  report.mode = mode;
  report.k_final = k_final;
  report.objective = clustering.objective;
  report.iterations = clustering.iterations;
  report.converged = clustering.converged;
  report.cap_reached = cap_reached;
  report.split_history = split_history;

  const auto stats = cluster_burstiness_memory(raw, clustering.assignment.cluster_of,
                                               k_final, metrics_dimension, lag);
  const auto totals = cumulative_popularity(raw, clustering.assignment.cluster_of, k_final,
                                            metrics_dimension);
  report.clusters.resize(static_cast<std::size_t>(k_final));
  for (int k = 0; k < k_final; ++k) {
    auto& entry = report.clusters[static_cast<std::size_t>(k)];
    entry.id = k;
    const auto& shape = clustering.centroids[static_cast<std::size_t>(k)].shape;
    entry.centroid.resize(static_cast<std::size_t>(shape.rows()));
    for (Eigen::Index d = 0; d < shape.rows(); ++d) {
      entry.centroid[static_cast<std::size_t>(d)].assign(shape.row(d).begin(),
                                                         shape.row(d).end());
    }
    entry.temporal = stats[static_cast<std::size_t>(k)];
    entry.cumulative_popularity = totals[static_cast<std::size_t>(k)];
  }
  for (std::size_t n = 0; n < raw.entity_count(); ++n) {
    auto& entry = report.clusters[static_cast<std::size_t>(
        clustering.assignment.cluster_of[n])];
    entry.members.push_back(raw.entity_ids()[n]);
    entry.shifts.push_back(clustering.assignment.q_of[n]);
    const auto row = clustering.assignment.alpha_of.row(static_cast<Eigen::Index>(n));
    entry.alphas.emplace_back(row.begin(), row.end());
  }
  return report;
}

namespace {

ordered_json temporal_to_json(const ClusterTemporalStats& s) {
  ordered_json j;
  j["members"] = s.members;
  j["no_events"] = s.no_events;
  j["burstiness_count"] = s.burstiness_count;
  j["mean_burstiness"] = s.mean_burstiness ? ordered_json(*s.mean_burstiness)
                                           : ordered_json(nullptr);
  j["memory_count"] = s.memory_count;
  j["mean_memory"] = s.mean_memory ? ordered_json(*s.mean_memory) : ordered_json(nullptr);
  return j;
}

ClusterTemporalStats temporal_from_json(const ordered_json& j, int cluster) {
  ClusterTemporalStats s;
  s.cluster = cluster;
  s.members = j.at("members").get<int>();
  s.no_events = j.at("no_events").get<int>();
  s.burstiness_count = j.at("burstiness_count").get<int>();
  if (!j.at("mean_burstiness").is_null()) {
    s.mean_burstiness = j.at("mean_burstiness").get<double>();
  }
  s.memory_count = j.at("memory_count").get<int>();
  if (!j.at("mean_memory").is_null()) s.mean_memory = j.at("mean_memory").get<double>();
  return s;
}

}  // namespace

std::string report_to_json(const ClusteringReport& report) {
  ordered_json j;
  j["schema"] = ClusteringReport::kSchema;
  j["mode"] = report.mode;
  j["config"] = report.config;
  j["k_final"] = report.k_final;
  j["objective"] = report.objective;
  j["iterations"] = report.iterations;
  j["converged"] = report.converged;
  j["cap_reached"] = report.cap_reached;
  auto& hist = j["split_history"] = ordered_json::array();
  for (const auto& e : report.split_history) {
    hist.push_back({{"round", e.round},
                    {"cluster", e.cluster},
                    {"score", e.score},
                    {"k_after", e.k_after},
                    {"objective_after", e.objective_after}});
  }
  auto& clusters = j["clusters"] = ordered_json::array();
  for (const auto& c : report.clusters) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["size"] = c.members.size();
    jc["centroid"] = c.centroid;
    jc["members"] = c.members;
    jc["shifts"] = c.shifts;
    jc["alphas"] = c.alphas;
    jc["temporal"] = temporal_to_json(c.temporal);
    jc["cumulative_popularity"] = c.cumulative_popularity;
    clusters.push_back(std::move(jc));
  }
  if (report.wall_seconds) {
    j["timing"] = ordered_json{{"seconds", *report.wall_seconds}};
  }
  return j.dump(1) + "\n";
}

ClusteringReport report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("report: invalid JSON: ") + e.what());
  }
  if (j.value("schema", -1) != ClusteringReport::kSchema) {
    throw ParseError("report: unsupported schema");
  }
  ClusteringReport r;
  r.mode = j.at("mode").get<std::string>();
  r.config = j.at("config").get<std::map<std::string, std::string>>();
  r.k_final = j.at("k_final").get<int>();
  r.objective = j.at("objective").get<double>();
  r.iterations = j.at("iterations").get<int>();
  r.converged = j.at("converged").get<bool>();
  r.cap_reached = j.at("cap_reached").get<bool>();
  for (const auto& e : j.at("split_history")) {
    r.split_history.push_back({e.at("round").get<int>(), e.at("cluster").get<int>(),
                               e.at("score").get<double>(), e.at("k_after").get<int>(),
                               e.at("objective_after").get<double>()});
  }
  for (const auto& jc : j.at("clusters")) {
    ClusteringReport::ClusterEntry c;
    c.id = jc.at("id").get<int>();
    c.centroid = jc.at("centroid").get<std::vector<std::vector<double>>>();
    c.members = jc.at("members").get<std::vector<std::string>>();
    c.shifts = jc.at("shifts").get<std::vector<int>>();
    c.alphas = jc.at("alphas").get<std::vector<std::vector<double>>>();
    c.temporal = temporal_from_json(jc.at("temporal"), c.id);
    c.cumulative_popularity = jc.at("cumulative_popularity").get<std::vector<double>>();
    r.clusters.push_back(std::move(c));
  }
  if (j.contains("timing")) r.wall_seconds = j.at("timing").at("seconds").get<double>();
  return r;
}

void save_report(const ClusteringReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << report_to_json(report);
}

ClusteringReport load_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return report_from_json(text);
}

}  // namespace dipmsc
