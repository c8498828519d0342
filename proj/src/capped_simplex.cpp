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

#include "proxbp/capped_simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "proxbp/errors.hpp"

namespace proxbp {

namespace {

void check_instance(std::span<const double> a, double b) {
  if (a.empty()) throw ContractError("projection needs K >= 1");
  if (!(b >= 0.0)) throw ContractError("projection needs b >= 0");
}

double positive_mass(std::span<const double> a, double theta) {
  double s = 0.0;
  for (double v : a) s += std::max(0.0, v - theta);
  return s;
}

Projection threshold(std::span<const double> a, double theta) {
  Projection p;
  p.theta = theta;
  p.z.resize(a.size());
  for (size_t k = 0; k < a.size(); ++k) p.z[k] = std::max(0.0, a[k] - theta);
  return p;
}

}  // namespace

Projection project_sorted(std::span<const double> a, double b) {
  check_instance(a, b);
  if (positive_mass(a, 0.0) <= b) return threshold(a, 0.0);

  const size_t K = a.size();
  std::vector<size_t> order(K);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t i, size_t j) { return a[i] > a[j]; });

  constexpr double kMinusInf = -std::numeric_limits<double>::infinity();
  double partial = 0.0;
  double theta = 0.0;
  bool found = false;
  // Fallback for b = 0 (no k passes the strict test, theta = max a) and for
  // rounding near ties: the last k whose level leaves a_pi(k) above it.
  double last_valid = 0.0;
  for (size_t k = 1; k <= K; ++k) {
    const double top = a[order[k - 1]];
    const double next = k < K ? a[order[k]] : kMinusInf;
    partial += top;
    const double level = (partial - b) / static_cast<double>(k);
    if (k == 1 || top - level > 0.0) last_valid = level;
    if (level >= 0.0 && top - level > 0.0 && next - level <= 0.0) {
      theta = level;
      found = true;
      break;
    }
  }
  if (!found) theta = std::max(0.0, last_valid);
  return threshold(a, theta);
}

Projection project_bisect(std::span<const double> a, double b, double tol) {
  check_instance(a, b);
  if (!(tol > 0.0)) throw ContractError("bisection tolerance must be > 0");
  if (positive_mass(a, 0.0) <= b) return threshold(a, 0.0);

  double lo = 0.0;
  double hi = *std::max_element(a.begin(), a.end());
  for (int it = 0; it < kBisectIterationCap; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double excess = positive_mass(a, mid) - b;
    if (std::abs(excess) <= tol) return threshold(a, mid);
    if (excess > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw NumericError("capped-simplex bisection hit its iteration cap");
}

double kkt_residual(std::span<const double> a, double b,
                    std::span<const double> z, double theta) {
  if (a.size() != z.size()) throw ContractError("dimension mismatch");
  double worst = std::max(0.0, -theta);
  double total = 0.0;
  for (size_t k = 0; k < a.size(); ++k) {
    const double nu = z[k] - a[k] + theta;
    worst = std::max({worst, -nu, -z[k], std::abs(nu * z[k])});
    total += z[k];
  }
  const double slack = total - b;
  worst = std::max({worst, slack, std::abs(theta * slack)});
  return worst;
}

}  // namespace proxbp
