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

#include "dipmsc/io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace dipmsc {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

SeriesTensor load_long_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path + ": empty file");
  {
    auto header = split_csv_line(line);
    if (header.size() != 4 || header[0] != "entity" || header[1] != "dimension" ||
        header[2] != "t" || header[3] != "value") {
      throw ParseError(path + ": expected header 'entity,dimension,t,value'");
    }
  }

  struct Cell {
    std::size_t entity, dim;
    long t;
    double value;
  };
  std::vector<Cell> cells;
  std::vector<std::string> entity_order, dim_order;
  std::unordered_map<std::string, std::size_t> entity_idx, dim_idx;
  std::unordered_map<std::uint64_t, std::size_t> seen_cells;
  long max_t = -1;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 4) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected 4 fields");
    }
    const std::string& ent = fields[0];
    const std::string& dim = fields[1];
    long t = 0;
    double value = 0.0;
    try {
      std::size_t pos = 0;
      t = std::stol(fields[2], &pos);
      if (pos != fields[2].size()) throw std::invalid_argument("trailing");
      value = std::stod(fields[3], &pos);
      if (pos != fields[3].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": malformed row");
    }
    if (t < 0) throw ParseError(path + ":" + std::to_string(lineno) + ": negative t");
    if (!std::isfinite(value) || value < 0.0) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": value must be finite and >= 0");
    }
    auto [eit, enew] = entity_idx.try_emplace(ent, entity_order.size());
    if (enew) entity_order.push_back(ent);
    auto [dit, dnew] = dim_idx.try_emplace(dim, dim_order.size());
    if (dnew) dim_order.push_back(dim);
    const std::uint64_t key =
        ((static_cast<std::uint64_t>(eit->second) * 1000003u + dit->second) << 24) ^
        static_cast<std::uint64_t>(t);
    if (!seen_cells.emplace(key, lineno).second) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": duplicate cell (" + ent + "," +
                       dim + "," + fields[2] + ")");
    }
    max_t = std::max(max_t, t);
    cells.push_back({eit->second, dit->second, t, value});
  }
  if (entity_order.empty()) throw ParseError(path + ": no data rows");
  const auto T = static_cast<Eigen::Index>(max_t + 1);
  const auto D = static_cast<Eigen::Index>(dim_order.size());
  std::vector<MultiSeries> entities(entity_order.size());
  for (auto& e : entities) e.values = Eigen::MatrixXd::Zero(D, T);
  for (const auto& c : cells) {
    entities[c.entity].values(static_cast<Eigen::Index>(c.dim), c.t) = c.value;
  }
  return SeriesTensor(std::move(entities), std::move(entity_order), std::move(dim_order),
                      "step");
}

SeriesTensor load_tensor_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(path + ": invalid JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("dimensions") || !j.contains("entities")) {
    throw ParseError(path + ": expected object with 'dimensions' and 'entities'");
  }
  std::string time_unit = j.value("time_unit", std::string("step"));
  std::vector<std::string> dims;
  for (const auto& d : j.at("dimensions")) dims.push_back(d.get<std::string>());
  std::vector<MultiSeries> entities;
  std::vector<std::string> ids;
  Eigen::Index T = -1;
  for (const auto& e : j.at("entities")) {
    if (!e.contains("id") || !e.contains("series")) {
      throw ParseError(path + ": entity needs 'id' and 'series'");
    }
    ids.push_back(e.at("id").get<std::string>());
    const auto& series = e.at("series");
    if (series.size() != dims.size()) {
      throw ShapeError(path + ": entity '" + ids.back() + "' has " +
                       std::to_string(series.size()) + " rows, expected " +
                       std::to_string(dims.size()));
    }
    Eigen::Index rows = static_cast<Eigen::Index>(dims.size());
    MultiSeries ms;
    for (Eigen::Index d = 0; d < rows; ++d) {
      const auto& row = series[static_cast<std::size_t>(d)];
      if (T < 0 && d == 0 && ids.size() == 1) T = static_cast<Eigen::Index>(row.size());
      if (static_cast<Eigen::Index>(row.size()) != T) {
        throw ShapeError(path + ": entity '" + ids.back() + "' row length " +
                         std::to_string(row.size()) + " differs from T=" + std::to_string(T));
      }
      if (ms.values.size() == 0) ms.values.resize(rows, T);
      for (Eigen::Index t = 0; t < T; ++t) {
        ms.values(d, t) = row[static_cast<std::size_t>(t)].get<double>();
      }
    }
    entities.push_back(std::move(ms));
  }
  return SeriesTensor(std::move(entities), std::move(ids), std::move(dims),
                      std::move(time_unit));
}

}  // namespace

TensorFormat parse_tensor_format(const std::string& name) {
  if (name == "long-csv") return TensorFormat::kLongCsv;
  if (name == "tensor-json") return TensorFormat::kTensorJson;
  throw ConfigError("unknown format '" + name + "' (expected long-csv or tensor-json)");
}

SeriesTensor load_tensor(const std::string& path, TensorFormat format) {
  return format == TensorFormat::kLongCsv ? load_long_csv(path) : load_tensor_json(path);
}

void save_tensor(const SeriesTensor& tensor, const std::string& path, TensorFormat format) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  if (format == TensorFormat::kTensorJson) {
    ordered_json j;
    j["time_unit"] = tensor.time_unit();
    j["dimensions"] = tensor.dimension_names();
    auto& ents = j["entities"] = ordered_json::array();
    for (std::size_t n = 0; n < tensor.entity_count(); ++n) {
      ordered_json e;
      e["id"] = tensor.entity_ids()[n];
      auto& series = e["series"] = ordered_json::array();
      const auto& v = tensor.entity(n).values;
      for (Eigen::Index d = 0; d < v.rows(); ++d) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index t = 0; t < v.cols(); ++t) row.push_back(v(d, t));
        series.push_back(std::move(row));
      }
      ents.push_back(std::move(e));
    }
    out << j.dump(1) << "\n";
  } else {
    out << "entity,dimension,t,value\n";
    char buf[64];
    for (std::size_t n = 0; n < tensor.entity_count(); ++n) {
      const auto& v = tensor.entity(n).values;
      for (Eigen::Index d = 0; d < v.rows(); ++d) {
        for (Eigen::Index t = 0; t < v.cols(); ++t) {
          std::snprintf(buf, sizeof(buf), "%.17g", v(d, t));
          out << tensor.entity_ids()[n] << ',' << tensor.dimension_names()[d] << ',' << t
              << ',' << buf << '\n';
        }
      }
    }
  }
}

void save_truth_labels(const std::vector<int>& truth, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  ordered_json j;
  j["truth"] = truth;
  out << j.dump() << "\n";
}

std::vector<int> load_truth_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(path + ": invalid JSON: " + e.what());
  }
  if (!j.contains("truth")) throw ParseError(path + ": missing 'truth'");
  return j.at("truth").get<std::vector<int>>();
}

}  // namespace dipmsc
