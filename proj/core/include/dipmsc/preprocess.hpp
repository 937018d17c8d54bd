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

#include "dipmsc/series.hpp"

namespace dipmsc {

/// Gaussian smoothing of every dimension row with sigma = window/4 and
/// symmetric taps at integer offsets -floor(window/2)..floor(window/2).
/// Boundaries are handled by mirror reflection, which keeps constant rows
/// and row sums exactly unchanged. window == 1 is the identity.
/// Throws WindowError unless 1 <= window <= T.
MultiSeries gaussian_smooth(const MultiSeries& x, int window);

/// Rescales every dimension row to unit Euclidean norm. The shape distance
/// is invariant to this, it only improves conditioning.
/// Throws DegenerateEntityError on an all-zero row.
MultiSeries zscore_free_normalize(const MultiSeries& x);

}  // namespace dipmsc
