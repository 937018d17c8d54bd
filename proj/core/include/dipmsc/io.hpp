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

#include <string>
#include <vector>

#include "dipmsc/series.hpp"

namespace dipmsc {

enum class TensorFormat { kLongCsv, kTensorJson };

/// Parses "long-csv" or "tensor-json" into the enum. Throws ConfigError.
TensorFormat parse_tensor_format(const std::string& name);

/// Loads and validates a tensor.
///
/// long-csv: header `entity,dimension,t,value`, rows in any order, missing
/// cells zero-filled. tensor-json: `{"time_unit", "dimensions", "entities":
/// [{"id", "series": [[...], ...]}]}` with uniform D x T series.
SeriesTensor load_tensor(const std::string& path, TensorFormat format);

/// Writes a tensor in the given format (tensor-json round-trips exactly).
void save_tensor(const SeriesTensor& tensor, const std::string& path, TensorFormat format);

/// Truth sidecar `{"truth": [int,...]}` used by the benchmark generator.
void save_truth_labels(const std::vector<int>& truth, const std::string& path);
std::vector<int> load_truth_labels(const std::string& path);

}  // namespace dipmsc
