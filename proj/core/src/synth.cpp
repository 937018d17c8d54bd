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

#include "dipmsc/synth.hpp"

#include <cmath>

#include "dipmsc/detail/rng.hpp"
#include "dipmsc/distance.hpp"

namespace dipmsc {

ShapeFamily parse_shape_family(const std::string& name) {
  if (name == "gaussian-pulse") return ShapeFamily::kGaussianPulse;
  if (name == "double-pulse") return ShapeFamily::kDoublePulse;
  if (name == "ramp") return ShapeFamily::kRamp;
  if (name == "periodic") return ShapeFamily::kPeriodic;
  throw ConfigError("unknown shape family '" + name + "'");
}

std::string shape_family_name(ShapeFamily family) {
  switch (family) {
    case ShapeFamily::kGaussianPulse: return "gaussian-pulse";
    case ShapeFamily::kDoublePulse: return "double-pulse";
    case ShapeFamily::kRamp: return "ramp";
    case ShapeFamily::kPeriodic: return "periodic";
  }
  return "?";
}

namespace {

// Pulse value at offset o from the center, truncated to |o| <= hw so the
// prototype margins stay exactly zero.
double pulse_value(ShapeFamily family, double o, double sigma, int hw) {
  switch (family) {
    case ShapeFamily::kGaussianPulse: {
      if (std::abs(o) > hw) return 0.0;
      const double z = o / sigma;
      return std::exp(-0.5 * z * z);
    }
    case ShapeFamily::kDoublePulse: {
      double v = 0.0;
      if (std::abs(o) <= hw) {
        const double z = o / sigma;
        v = std::exp(-0.5 * z * z);
      }
      const double o2 = o - 1.5 * hw;
      if (std::abs(o2) <= hw) {
        const double z = o2 / sigma;
        v += 0.6 * std::exp(-0.5 * z * z);
      }
      return v;
    }
    case ShapeFamily::kRamp: {
      if (o < -hw || o > hw) return 0.0;
      if (o <= 0.0) return 1.0 + o / hw;        // linear rise
      return std::max(0.0, 1.0 - 2.0 * o / hw); // steeper fall
    }
    case ShapeFamily::kPeriodic:
      return 0.0;  // periodic rows are generated without a center
  }
  return 0.0;
}

}  // namespace

GeneratedData generate(const GeneratorSpec& spec) {
  if (spec.k_true < 1 || spec.n_per < 1 || spec.dims < 1 || spec.steps < 2) {
    throw SpecError("generate: counts must be positive and T >= 2");
  }
  if (spec.shift_jitter < 0 || spec.shift_jitter * 4 >= spec.steps) {
    throw SpecError("generate: shift_jitter must satisfy 0 <= jitter < T/4");
  }
  if (spec.scale_jitter < 1.0) throw SpecError("generate: scale_jitter must be >= 1");
  if (spec.noise_sigma < 0.0) throw SpecError("generate: noise_sigma must be >= 0");

  const int T = spec.steps;
  const int D = spec.dims;
  const int K = spec.k_true;
  const int margin = spec.shift_jitter;

  const double sigma_base = std::max(0.75, T / 36.0);
  auto dim_sigma = [&](int d) { return sigma_base * (1.0 + 0.15 * std::min(d, 4)); };
  const int hw = static_cast<int>(std::ceil(3.0 * dim_sigma(D - 1)));

  // support radius per family (left, right of the center)
  int left = hw, right = hw;
  if (spec.family == ShapeFamily::kDoublePulse) right = hw + (3 * hw) / 2;

  std::vector<int> centers(static_cast<std::size_t>(K), 0);
  std::vector<int> periods(static_cast<std::size_t>(K), 0);
  if (spec.family == ShapeFamily::kPeriodic) {
    const int span = T - 2 * margin;
    for (int k = 0; k < K; ++k) {
      periods[static_cast<std::size_t>(k)] = 4 + 2 * k;
      if (periods[static_cast<std::size_t>(k)] > span) {
        throw SpecError("generate: period " + std::to_string(periods[k]) +
                        " does not fit in the usable span " + std::to_string(span));
      }
    }
  } else {
    const int lo = margin + left;
    const int hi = T - 1 - margin - right;
    const int minsep = 2 * spec.shift_jitter + left + right;
    if (hi < lo || (K > 1 && (hi - lo) < (K - 1) * minsep)) {
      throw SpecError("generate: " + std::to_string(K) + " centers with separation " +
                      std::to_string(minsep) + " do not fit in [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "]");
    }
    if (K == 1) {
      centers[0] = (lo + hi) / 2;
    } else {
      const int sep = (hi - lo) / (K - 1);
      for (int k = 0; k < K; ++k) centers[static_cast<std::size_t>(k)] = lo + k * sep;
    }
  }

  std::vector<Eigen::MatrixXd> prototypes;
  for (int k = 0; k < K; ++k) {
    Eigen::MatrixXd proto = Eigen::MatrixXd::Zero(D, T);
    for (int d = 0; d < D; ++d) {
      if (spec.family == ShapeFamily::kPeriodic) {
        const int p = periods[static_cast<std::size_t>(k)];
        for (int t = margin; t < T - margin; ++t) {
          proto(d, t) = std::abs(std::sin((3.14159265358979323846 * (t - margin)) /
                                          (p * (1.0 + 0.15 * std::min(d, 4)))));
        }
      } else {
        const double sigma = dim_sigma(d);
        const int c = centers[static_cast<std::size_t>(k)];
        for (int t = 0; t < T; ++t) {
          proto(d, t) = pulse_value(spec.family, t - c, sigma, hw);
        }
      }
    }
    prototypes.push_back(std::move(proto));
  }

  detail::Rng root(detail::mix_seed(spec.seed, 0x73796e74ULL));
  std::vector<MultiSeries> entities;
  std::vector<std::string> ids;
  std::vector<int> truth;
  entities.reserve(static_cast<std::size_t>(K) * spec.n_per);
  char idbuf[32];
  for (int k = 0; k < K; ++k) {
    for (int m = 0; m < spec.n_per; ++m) {
      detail::Rng rng = root.child(static_cast<std::uint64_t>(k) * 1000003u + m);
      MultiSeries member;
      if (spec.per_dimension_shift) {
        member.values.resize(D, T);
        for (int d = 0; d < D; ++d) {
          const int q = static_cast<int>(rng.range(-spec.shift_jitter, spec.shift_jitter));
          MultiSeries one{prototypes[static_cast<std::size_t>(k)].row(d)};
          member.values.row(d) = shift(one, q).values.row(0);
        }
      } else {
        const int q = static_cast<int>(rng.range(-spec.shift_jitter, spec.shift_jitter));
        member = shift(MultiSeries{prototypes[static_cast<std::size_t>(k)]}, q);
      }
      for (int d = 0; d < D; ++d) {
        double scale = 1.0;
        if (spec.scale_jitter > 1.0) {
          scale = rng.uniform(1.0 / spec.scale_jitter, spec.scale_jitter);
        }
        member.values.row(d) *= scale;
        if (spec.noise_sigma > 0.0) {
          const double peak = member.values.row(d).maxCoeff();
          const double sn = spec.noise_sigma * peak;
          for (int t = 0; t < T; ++t) {
            member.values(d, t) = std::max(0.0, member.values(d, t) + sn * rng.normal());
          }
        }
      }
      entities.push_back(std::move(member));
      std::snprintf(idbuf, sizeof(idbuf), "e%04d", static_cast<int>(ids.size()));
      ids.emplace_back(idbuf);
      truth.push_back(k);
    }
  }

  std::vector<std::string> names;
  for (int d = 0; d < D; ++d) names.push_back("dim" + std::to_string(d));
  return GeneratedData{
      SeriesTensor(std::move(entities), std::move(ids), std::move(names), "step"),
      std::move(truth), std::move(prototypes)};
}

}  // namespace dipmsc
