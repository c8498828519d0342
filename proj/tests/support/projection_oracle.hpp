// Copyright 2026 The proxbp Authors.
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

#ifndef PROXBP_TESTS_PROJECTION_ORACLE_HPP_
#define PROXBP_TESTS_PROJECTION_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace proxbp::testing {

// theta on a `step` grid over [0, max a] minimizing
// |sum max(0, a - theta) - b|; 0 when the cap is slack at theta = 0.
inline double grid_theta(std::span<const double> a, double b, double step) {
  auto excess = [&](double th) {
    double s = 0.0;
    for (double v : a) s += std::max(0.0, v - th);
    return s - b;
  };
  if (excess(0.0) <= 0.0) return 0.0;
  const double top = *std::max_element(a.begin(), a.end());
  double best = 0.0, best_err = std::abs(excess(0.0));
  for (double th = 0.0; th <= top + step; th += step) {
    const double err = std::abs(excess(th));
    if (err < best_err) {
      best_err = err;
      best = th;
    }
  }
  return best;
}

// Squared distance from a to the nearest point of {p in step Z^K, p >= 0,
// sum p <= b}, found exhaustively by dynamic programming over the used
// budget (in grid units).
inline double grid_nearest_sq(std::span<const double> a, double b,
                              double step) {
  const int units = static_cast<int>(std::floor(b / step + 1e-9));
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> best(units + 1, inf), next(units + 1);
  best[0] = 0.0;
  for (double ak : a) {
    std::fill(next.begin(), next.end(), inf);
    for (int used = 0; used <= units; ++used) {
      if (best[used] == inf) continue;
      for (int take = 0; used + take <= units; ++take) {
        const double d = take * step - ak;
        next[used + take] = std::min(next[used + take], best[used] + d * d);
        // Once past a_k the cost only grows.
        if (take * step > ak) break;
      }
    }
    best.swap(next);
  }
  return *std::min_element(best.begin(), best.end());
}

}  // namespace proxbp::testing

#endif  // PROXBP_TESTS_PROJECTION_ORACLE_HPP_
