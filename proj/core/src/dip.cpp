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

// The dip of an empirical CDF is half the minimal height of a band, centered
// on a monotone convex-then-concave function with one jump at the mode, that
// contains every step corner. Over the blocks of tied values with pre-jump
// corner A_k = a_k/n and post-jump corner L_k = (b_k+1)/n, the minimal band
// for mode block p is the largest of three certificate families:
//   - lower corners L_k poking above the lower convex hull of the A corners
//     up to p (the convex side, capped by the mode's pre corner),
//   - the mirrored concave-side gaps anchored at the mode's post corner,
//   - coupled certificates: the steepest forced rise through a pair
//     (A_{k1} upper gate, L_{k2} lower gate) extrapolated to the mode must
//     stay below the mirrored backward line from the concave side.
// The first two families do not depend on the band height and are
// precomputed once; the coupled family is resolved by bisection on the
// height with an O(B log B) sweep per probe. The right-hand side reuses the
// left-hand machinery through the point reflection (x, y) -> (-x, -y),
// which swaps convex for concave and later for earlier.

#include "dipmsc/dip.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dipmsc/detail/parallel.hpp"
#include "dipmsc/detail/rng.hpp"
#include "dipmsc/errors.hpp"

namespace dipmsc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Blocks {
  std::vector<double> v;  // distinct values, ascending
  std::vector<double> A;  // pre-jump corner a_k/n
  std::vector<double> L;  // post-jump corner (b_k+1)/n
};

Blocks make_blocks(const std::vector<double>& sorted) {
  const std::size_t n = sorted.size();
  Blocks b;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && sorted[j + 1] == sorted[i]) ++j;
    b.v.push_back(sorted[i]);
    b.A.push_back(static_cast<double>(i) / static_cast<double>(n));
    b.L.push_back(static_cast<double>(j + 1) / static_cast<double>(n));
    i = j + 1;
  }
  return b;
}

// Max-of-lines envelope over fixed query positions xs (Li Chao tree).
class LineEnvelope {
 public:
  explicit LineEnvelope(std::size_t size, const double* xs) : xs_(xs), size_(size) {
    node_.assign(4 * std::max<std::size_t>(1, size), kNone);
  }

  void reset() {
    std::fill(node_.begin(), node_.end(), kNone);
    lines_.clear();
  }

  void add(double slope, double x0, double y0) {
    lines_.push_back({slope, y0 - slope * x0});
    insert(1, 0, size_ - 1, lines_.size() - 1);
  }

  double query(std::size_t i) const {
    double best = -kInf;
    std::size_t node = 1, lo = 0, hi = size_ - 1;
    while (true) {
      if (node_[node] != kNone) best = std::max(best, eval(node_[node], xs_[i]));
      if (lo == hi) break;
      const std::size_t mid = lo + (hi - lo) / 2;
      if (i <= mid) {
        node = 2 * node;
        hi = mid;
      } else {
        node = 2 * node + 1;
        lo = mid + 1;
      }
    }
    return best;
  }

 private:
  struct Line {
    double m, b;
  };
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  double eval(std::size_t id, double x) const { return lines_[id].m * x + lines_[id].b; }

  void insert(std::size_t node, std::size_t lo, std::size_t hi, std::size_t id) {
    while (true) {
      if (node_[node] == kNone) {
        node_[node] = id;
        return;
      }
      const std::size_t mid = lo + (hi - lo) / 2;
      if (eval(id, xs_[mid]) > eval(node_[node], xs_[mid])) std::swap(node_[node], id);
      if (lo == hi) return;
      if (eval(id, xs_[lo]) > eval(node_[node], xs_[lo])) {
        node = 2 * node;
        hi = mid;
      } else if (eval(id, xs_[hi]) > eval(node_[node], xs_[hi])) {
        node = 2 * node + 1;
        lo = mid + 1;
      } else {
        return;
      }
    }
  }

  const double* xs_;
  std::size_t size_;
  std::vector<std::size_t> node_;
  std::vector<Line> lines_;
};

// One orientation of the data: the left sweep uses (v, A, L) as is, the
// right sweep uses the point reflection (-v, -L, -A) in reversed order.
struct Oriented {
  std::vector<double> x;   // ascending positions
  std::vector<double> lo;  // convex-minorant constraint corners
  std::vector<double> hi;  // corners that must not poke above the minorant
};

// Steepest slope from external point (px, py) down to hull vertices (all
// hull x < px). The slope along a convex chain is unimodal.
double max_slope_to(const std::vector<std::size_t>& hull, const Oriented& o, double px,
                    double py) {
  auto slope = [&](std::size_t i) { return (py - o.lo[hull[i]]) / (px - o.x[hull[i]]); };
  std::size_t a = 0, b = hull.size() - 1;
  while (a < b) {
    const std::size_t mid = a + (b - a) / 2;
    if (slope(mid) < slope(mid + 1)) {
      a = mid + 1;
    } else {
      b = mid;
    }
  }
  return slope(a);
}

// d-free internal gaps: internal[p] = max over k < p of
//   hi_k - hull(x_k), hull = lower convex hull of (x_i, lo_i), i <= p.
// Gaps only grow as the hull gains points, so values recorded when their
// covering segment last changed stay current.
std::vector<double> internal_gaps(const Oriented& o) {
  const std::size_t B = o.x.size();
  std::vector<double> out(B, 0.0);
  std::vector<std::size_t> hull;
  hull.reserve(B);
  double running = 0.0;
  for (std::size_t p = 0; p < B; ++p) {
    while (hull.size() >= 2) {
      const std::size_t i1 = hull[hull.size() - 2], i2 = hull.back();
      if ((o.lo[i2] - o.lo[i1]) * (o.x[p] - o.x[i2]) >=
          (o.lo[p] - o.lo[i2]) * (o.x[i2] - o.x[i1])) {
        hull.pop_back();
      } else {
        break;
      }
    }
    if (!hull.empty()) {
      const std::size_t kept = hull.back();
      const double x1 = o.x[kept], y1 = o.lo[kept];
      const double slope = (o.lo[p] - y1) / (o.x[p] - x1);
      for (std::size_t k = kept + 1; k < p; ++k) {
        running = std::max(running, o.hi[k] - (y1 + slope * (o.x[k] - x1)));
      }
    }
    hull.push_back(p);
    out[p] = running;
    running = std::max(running, o.hi[p] - o.lo[p]);
  }
  return out;
}

// Tightest value the convex side can end with at each mode position, for
// band half-width d: VL[p] = max over the monotone bound and the steepest
// forced-rise lines from earlier (upper gate, lower gate) pairs.
void coupled_bounds(const Oriented& o, double d, LineEnvelope& env,
                    std::vector<std::size_t>& hull, std::vector<double>& VL) {
  const std::size_t B = o.x.size();
  const double two_d = 2.0 * d;
  env.reset();
  hull.clear();
  for (std::size_t p = 0; p < B; ++p) {
    double vl = p >= 1 ? o.hi[p - 1] - d : -kInf;
    vl = std::max(vl, env.query(p));
    VL[p] = vl;
    if (!hull.empty()) {
      const double s = max_slope_to(hull, o, o.x[p], o.hi[p] - two_d);
      if (s > 0.0) env.add(s, o.x[p], o.hi[p] - d);
    }
    while (hull.size() >= 2) {
      const std::size_t i1 = hull[hull.size() - 2], i2 = hull.back();
      if ((o.lo[i2] - o.lo[i1]) * (o.x[p] - o.x[i2]) >=
          (o.lo[p] - o.lo[i2]) * (o.x[i2] - o.x[i1])) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
}

double dip_of_sorted(const std::vector<double>& sorted) {
  const std::size_t n = sorted.size();
  const double floor_dip = 1.0 / (2.0 * static_cast<double>(n));
  const Blocks b = make_blocks(sorted);
  const std::size_t B = b.v.size();
  if (B == 1) return floor_dip;

  Oriented left{b.v, b.A, b.L};
  Oriented right;
  right.x.resize(B);
  right.lo.resize(B);
  right.hi.resize(B);
  for (std::size_t i = 0; i < B; ++i) {
    const std::size_t j = B - 1 - i;
    right.x[i] = -b.v[j];
    right.lo[i] = -b.L[j];
    right.hi[i] = -b.A[j];
  }

  const std::vector<double> internalL = internal_gaps(left);
  const std::vector<double> internalR = internal_gaps(right);

  LineEnvelope envL(B, left.x.data()), envR(B, right.x.data());
  std::vector<double> VL(B), VRm(B);
  std::vector<std::size_t> hull;
  hull.reserve(B);

  auto feasible = [&](double d) {
    coupled_bounds(left, d, envL, hull, VL);
    coupled_bounds(right, d, envR, hull, VRm);
    for (std::size_t p = 0; p < B; ++p) {
      // VRm holds the reflected convex-side bound; the real concave-side
      // start bound at mode p is -VRm[B-1-p].
      if (internalL[p] <= 2.0 * d && internalR[B - 1 - p] <= 2.0 * d &&
          VL[p] <= -VRm[B - 1 - p]) {
        return true;
      }
    }
    return false;
  };

  double lo = 0.0, hi = 0.2500000001;
  while (!feasible(hi)) hi *= 2.0;
  for (int round = 0; round < 64; ++round) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (hi - lo < 1e-17) break;
  }
  return std::max(hi, floor_dip);
}

}  // namespace

double dip_statistic(const std::vector<double>& sample) {
  if (sample.size() < 4) {
    throw SampleSizeError("dip_statistic: need n >= 4, got " + std::to_string(sample.size()));
  }
  std::vector<double> sorted = sample;
  for (double x : sorted) {
    if (!std::isfinite(x)) throw SampleSizeError("dip_statistic: non-finite sample value");
  }
  std::sort(sorted.begin(), sorted.end());
  return dip_of_sorted(sorted);
}

std::vector<double> bootstrap_null_dips(std::size_t n, int b, std::uint64_t seed,
                                        int threads) {
  std::vector<double> dips(static_cast<std::size_t>(b));
  detail::parallel_for(static_cast<std::size_t>(b), threads, [&](std::size_t r) {
    detail::Rng rng(detail::mix_seed(seed, 0x6e756c6cULL, r));
    std::vector<double> u(n);
    for (auto& x : u) x = rng.uniform01();
    std::sort(u.begin(), u.end());
    dips[r] = dip_of_sorted(u);
  });
  return dips;
}

DipResult dip_pvalue(const std::vector<double>& sample, int b, std::uint64_t seed,
                     double alpha, int threads) {
  if (b < 100) throw ConfigError("dip_pvalue: need b >= 100");
  DipResult res;
  res.n = sample.size();
  res.dip = dip_statistic(sample);
  const auto nulls = bootstrap_null_dips(sample.size(), b, seed, threads);
  std::size_t count = 0;
  for (double nd : nulls) {
    if (nd >= res.dip) ++count;
  }
  res.p_value = static_cast<double>(count) / static_cast<double>(b);
  res.rejects_unimodality = res.p_value < alpha;
  return res;
}

double check_cluster_modality(const Eigen::MatrixXd& dist_rows, double alpha, int b,
                              std::uint64_t seed, int threads) {
  if (dist_rows.rows() != dist_rows.cols()) {
    throw ShapeError("check_cluster_modality: square submatrix required");
  }
  const auto size = static_cast<std::size_t>(dist_rows.rows());
  if (size < 5) return 0.0;
  const std::size_t n = size - 1;
  const auto nulls = bootstrap_null_dips(n, b, seed, threads);
  std::vector<int> splitter(size, 0);
  detail::parallel_for(size, threads, [&](std::size_t i) {
    std::vector<double> row;
    row.reserve(n);
    for (std::size_t j = 0; j < size; ++j) {
      if (j != i) row.push_back(dist_rows(static_cast<Eigen::Index>(i),
                                          static_cast<Eigen::Index>(j)));
    }
    const double dip = dip_statistic(row);
    std::size_t count = 0;
    for (double nd : nulls) {
      if (nd >= dip) ++count;
    }
    const double p = static_cast<double>(count) / static_cast<double>(b);
    splitter[i] = p < alpha ? 1 : 0;
  });
  double total = 0.0;
  for (int s : splitter) total += s;
  return total / static_cast<double>(size);
}

}  // namespace dipmsc
