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
#include <cstddef>
#include <string>
#include <vector>

#include "dipmsc/errors.hpp"

namespace dipmsc {

/// One entity's D x T slice: D dimension rows over T time steps.
struct MultiSeries {
  Eigen::MatrixXd values;  // D rows, T columns

  Eigen::Index dims() const { return values.rows(); }
  Eigen::Index steps() const { return values.cols(); }
};

/// Validates finiteness and that no dimension row is all zero.
/// Throws DegenerateEntityError / ShapeError.
void validate_series(const MultiSeries& x, const std::string& label = "series");

/// N entities x D dimensions x T time steps of non-negative activity.
/// Immutable after construction; all invariants checked at build time.
class SeriesTensor {
 public:
  SeriesTensor(std::vector<MultiSeries> entities, std::vector<std::string> entity_ids,
               std::vector<std::string> dimension_names, std::string time_unit);

  std::size_t entity_count() const { return entities_.size(); }
  Eigen::Index dims() const { return entities_.empty() ? 0 : entities_[0].dims(); }
  Eigen::Index steps() const { return entities_.empty() ? 0 : entities_[0].steps(); }

  const MultiSeries& entity(std::size_t n) const { return entities_[n]; }
  const std::vector<MultiSeries>& entities() const { return entities_; }
  const std::vector<std::string>& entity_ids() const { return entity_ids_; }
  const std::vector<std::string>& dimension_names() const { return dimension_names_; }
  const std::string& time_unit() const { return time_unit_; }

  /// Sub-tensor of the given entity indices, in the given order.
  SeriesTensor subset(const std::vector<std::size_t>& indices) const;

  /// Same tensor with fn applied to every entity slice (shape-preserving).
  template <typename Fn>
  SeriesTensor map(Fn&& fn) const {
    std::vector<MultiSeries> out;
    out.reserve(entities_.size());
    for (const auto& e : entities_) out.push_back(fn(e));
    return SeriesTensor(std::move(out), entity_ids_, dimension_names_, time_unit_);
  }

 private:
  std::vector<MultiSeries> entities_;
  std::vector<std::string> entity_ids_;
  std::vector<std::string> dimension_names_;
  std::string time_unit_;
};

}  // namespace dipmsc
