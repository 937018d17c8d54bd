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

#include "dipmsc/series.hpp"

#include <cmath>
#include <unordered_set>

namespace dipmsc {

void validate_series(const MultiSeries& x, const std::string& label) {
  if (x.values.size() == 0) throw ShapeError(label + ": empty series");
  if (!x.values.allFinite()) throw ShapeError(label + ": non-finite value");
  for (Eigen::Index d = 0; d < x.dims(); ++d) {
    if (x.values.row(d).norm() == 0.0) {
      throw DegenerateEntityError(label + ": all-zero dimension row " + std::to_string(d),
                                  {label});
    }
  }
}

SeriesTensor::SeriesTensor(std::vector<MultiSeries> entities,
                           std::vector<std::string> entity_ids,
                           std::vector<std::string> dimension_names, std::string time_unit)
    : entities_(std::move(entities)),
      entity_ids_(std::move(entity_ids)),
      dimension_names_(std::move(dimension_names)),
      time_unit_(std::move(time_unit)) {
  const std::size_t n = entities_.size();
  if (n < 1) throw ShapeError("tensor: needs at least one entity");
  if (entity_ids_.size() != n) throw ShapeError("tensor: entity id count mismatch");
  const Eigen::Index d = entities_[0].dims();
  const Eigen::Index t = entities_[0].steps();
  if (d < 1) throw ShapeError("tensor: needs at least one dimension");
  if (t < 2) throw ShapeError("tensor: needs at least two time steps");
  if (dimension_names_.size() != static_cast<std::size_t>(d)) {
    throw ShapeError("tensor: dimension name count mismatch");
  }
  std::unordered_set<std::string> seen;
  for (const auto& id : entity_ids_) {
    if (!seen.insert(id).second) throw ShapeError("tensor: duplicate entity id '" + id + "'");
  }
  seen.clear();
  for (const auto& name : dimension_names_) {
    if (!seen.insert(name).second) {
      throw ShapeError("tensor: duplicate dimension name '" + name + "'");
    }
  }

  std::vector<std::string> degenerate;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = entities_[i];
    if (e.dims() != d || e.steps() != t) {
      throw ShapeError("tensor: entity '" + entity_ids_[i] + "' has shape " +
                       std::to_string(e.dims()) + "x" + std::to_string(e.steps()) +
                       ", expected " + std::to_string(d) + "x" + std::to_string(t));
    }
    if (!e.values.allFinite()) {
      throw ShapeError("tensor: entity '" + entity_ids_[i] + "' has non-finite values");
    }
    if ((e.values.array() < 0.0).any()) {
      throw ShapeError("tensor: entity '" + entity_ids_[i] + "' has negative values");
    }
    for (Eigen::Index dd = 0; dd < d; ++dd) {
      if (e.values.row(dd).norm() == 0.0) {
        degenerate.push_back(entity_ids_[i]);
        break;
      }
    }
  }
  if (!degenerate.empty()) {
    std::string msg = "tensor: all-zero dimension row for entities:";
    for (const auto& id : degenerate) msg += " '" + id + "'";
    throw DegenerateEntityError(msg, degenerate);
  }
}

SeriesTensor SeriesTensor::subset(const std::vector<std::size_t>& indices) const {
  std::vector<MultiSeries> ents;
  std::vector<std::string> ids;
  ents.reserve(indices.size());
  ids.reserve(indices.size());
  for (std::size_t i : indices) {
    ents.push_back(entities_[i]);
    ids.push_back(entity_ids_[i]);
  }
  return SeriesTensor(std::move(ents), std::move(ids), dimension_names_, time_unit_);
}

}  // namespace dipmsc
