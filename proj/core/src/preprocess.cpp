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

#include "dipmsc/preprocess.hpp"

#include <cmath>
#include <vector>

namespace dipmsc {

MultiSeries gaussian_smooth(const MultiSeries& x, int window) {
  const Eigen::Index T = x.steps();
  if (window < 1) throw WindowError("smoothing window must be >= 1");
  if (window > T) {
    throw WindowError("smoothing window " + std::to_string(window) + " exceeds T=" +
                      std::to_string(T));
  }
  if (window == 1) return x;

  const int h = window / 2;
  const double sigma = window / 4.0;
  std::vector<double> w(static_cast<std::size_t>(2 * h + 1));
  double sum = 0.0;
  for (int o = -h; o <= h; ++o) {
    const double z = o / sigma;
    w[static_cast<std::size_t>(o + h)] = std::exp(-0.5 * z * z);
    sum += w[static_cast<std::size_t>(o + h)];
  }
  for (auto& v : w) v /= sum;

  MultiSeries out;
  out.values.resizeLike(x.values);
  for (Eigen::Index d = 0; d < x.dims(); ++d) {
    for (Eigen::Index t = 0; t < T; ++t) {
      double acc = 0.0;
      for (int o = -h; o <= h; ++o) {
        Eigen::Index src = t + o;
        // mirror across the edges: -1 -> 0, T -> T-1
        if (src < 0) src = -src - 1;
        if (src >= T) src = 2 * T - 1 - src;
        acc += w[static_cast<std::size_t>(o + h)] * x.values(d, src);
      }
      out.values(d, t) = acc;
    }
  }
  return out;
}

MultiSeries zscore_free_normalize(const MultiSeries& x) {
  MultiSeries out = x;
  for (Eigen::Index d = 0; d < x.dims(); ++d) {
    const double norm = x.values.row(d).norm();
    if (norm == 0.0) {
      throw DegenerateEntityError("normalize: all-zero dimension row " + std::to_string(d));
    }
    out.values.row(d) /= norm;
  }
  return out;
}

}  // namespace dipmsc
