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

#include <cstdint>
#include <string>
#include <vector>

#include "dipmsc/series.hpp"

namespace dipmsc {

enum class ShapeFamily { kGaussianPulse, kDoublePulse, kRamp, kPeriodic };

ShapeFamily parse_shape_family(const std::string& name);
std::string shape_family_name(ShapeFamily family);

/// Planted-cluster generator settings. Prototypes carry exact zero margins
/// of width shift_jitter so jittered members lose no mass to the zero-fill
/// shift. Per-member scale factors are drawn per dimension from
/// [1/scale_jitter, scale_jitter]; additive Gaussian noise with sigma =
/// noise_sigma * peak is truncated at zero.
struct GeneratorSpec {
  int k_true = 3;
  int n_per = 40;
  int dims = 2;
  int steps = 48;
  ShapeFamily family = ShapeFamily::kGaussianPulse;
  int shift_jitter = 2;
  double scale_jitter = 1.5;
  double noise_sigma = 0.05;
  std::uint64_t seed = 0;
  bool per_dimension_shift = false;  // adversarial mode: breaks the shared-q model
};

struct GeneratedData {
  SeriesTensor tensor;
  std::vector<int> truth;
  std::vector<Eigen::MatrixXd> prototypes;  // k_true shapes, D x T
};

/// Draws k_true prototype shapes with centers separated by at least
/// 2*shift_jitter + pulse width, then emits n_per members per cluster with
/// shared-q shift jitter, per-dimension scaling and truncated noise.
/// Throws SpecError when the separation constraint cannot fit in T.
GeneratedData generate(const GeneratorSpec& spec);

}  // namespace dipmsc
