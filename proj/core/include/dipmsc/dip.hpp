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
#include <cstdint>
#include <vector>

namespace dipmsc {

/// Dip statistic with its bootstrap verdict for one sample.
struct DipResult {
  double dip = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
  bool rejects_unimodality = false;
};

/// Hartigan's dip statistic: the sup-distance between the empirical CDF and
/// the closest unimodal CDF, computed from the greatest-convex-minorant /
/// least-concave-majorant band construction. Order-invariant; invariant
/// under increasing affine maps of the sample. Floored at 1/(2n).
/// Throws SampleSizeError for n < 4.
double dip_statistic(const std::vector<double>& sample);

/// Dip values of `b` sorted uniform(0,1) null samples of size n. Replicate
/// r uses an independent substream of `seed`, so the result is identical
/// under any parallel schedule.
std::vector<double> bootstrap_null_dips(std::size_t n, int b, std::uint64_t seed,
                                        int threads = 1);

/// Bootstrap p-value against the uniform null: the fraction of `b` null
/// samples whose dip is >= dip(sample). Deterministic for a fixed seed.
DipResult dip_pvalue(const std::vector<double>& sample, int b, std::uint64_t seed,
                     double alpha = 0.05, int threads = 1);

/// Fraction of cluster members whose row of distances to the other members
/// is multimodal at significance `alpha` (the "splitter" ratio). Uses rows
/// of the pairwise submatrix with the diagonal removed; clusters smaller
/// than 5 score 0. Null dips are shared across rows, which is exactly
/// equivalent to calling dip_pvalue per row with the same seed.
double check_cluster_modality(const Eigen::MatrixXd& dist_rows, double alpha, int b,
                              std::uint64_t seed, int threads = 1);

}  // namespace dipmsc
