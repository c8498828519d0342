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

#include "proxbp/rate_solver.hpp"

#include <algorithm>
#include <cmath>

#include "proxbp/errors.hpp"

namespace proxbp {

namespace {

constexpr int kMaxDoublings = 64;
constexpr double kOpenDomainEdge = 1e-12;

void check_problem(const RateProblem& p) {
  if (!(p.alpha > 0.0)) throw ContractError("alpha must be positive");
  if (!(p.x_prev >= 0.0)) throw ContractError("x_prev must be nonnegative");
}

}  // namespace

double rate_objective(const RateProblem& p, double x) {
  const double d = x - p.x_prev;
  return p.utility.value(x) - p.weight * x - p.alpha * d * d;
}

double rate_stationarity(const RateProblem& p, double x) {
  return p.utility.derivative(x) - 2.0 * p.alpha * x + 2.0 * p.alpha * p.x_prev -
         p.weight;
}

double solve_rate(const RateProblem& p, double tol) {
  check_problem(p);
  if (!(tol > 0.0)) throw ContractError("rate tolerance must be > 0");

  double lo = 0.0;
  if (p.utility.open_domain()) {
    lo = kOpenDomainEdge;
    int halvings = 0;
    while (rate_stationarity(p, lo) < 0.0) {
      if (++halvings > kMaxDoublings) {
        throw NumericError("rate bisection: no sign change near 0");
      }
      lo *= 0.5;
    }
  } else if (rate_stationarity(p, 0.0) <= 0.0) {
    return 0.0;
  }

  double hi = std::max(1.0, 2.0 * p.x_prev);
  int doublings = 0;
  while (rate_stationarity(p, hi) >= 0.0) {
    if (++doublings > kMaxDoublings) {
      throw NumericError("rate bisection: upper bracket not found");
    }
    lo = hi;
    hi *= 2.0;
  }

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (rate_stationarity(p, mid) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double closed_form_wlog(const RateProblem& p) {
  if (p.utility.kind() != UtilityKind::kWeightedLog) {
    throw ContractError("closed form applies to weighted-log utilities only");
  }
  check_problem(p);
  const double c = 2.0 * p.alpha * p.x_prev - p.weight;
  const double w = p.utility.weight();
  const double root = std::sqrt(c * c + 8.0 * p.alpha * w);
  if (c >= 0.0) return (c + root) / (4.0 * p.alpha);
  return 2.0 * w / (root - c);
}

}  // namespace proxbp
