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

#ifndef PROXBP_RATE_SOLVER_HPP_
#define PROXBP_RATE_SOLVER_HPP_

// Source update: maximize U(x) - W x - alpha (x - x_prev)^2 over dom(U).
// The objective is strongly concave, so its maximizer is the unique root of
//   h(x) = U'(x) - 2 alpha x + 2 alpha x_prev - W,
// or the left domain edge when h is already negative there.

#include "proxbp/network.hpp"

namespace proxbp {

struct RateProblem {
  Utility utility = Utility::weighted_log(1.0);
  double weight = 0.0;  // W, queue units
  double x_prev = 0.0;
  double alpha = 1.0;
};

inline constexpr double kDefaultRateTol = 1e-10;

double rate_objective(const RateProblem& p, double x);
double rate_stationarity(const RateProblem& p, double x);  // h(x)

// Bisection on h. Bracket: lo = 0 (closed domain) or 1e-12 (open domain,
// halved further while h(lo) < 0); hi starts at max(1, 2 x_prev) and doubles
// until h(hi) < 0. Returns once the bracket is narrower than tol.
// Throws ContractError for tol <= 0 or alpha <= 0, NumericError when
// 64 doublings do not bracket the root.
double solve_rate(const RateProblem& p, double tol = kDefaultRateTol);

// Closed-form root for U = w log x:
//   x = (2 alpha x_prev - W + sqrt((W - 2 alpha x_prev)^2 + 8 alpha w))
//       / (4 alpha),
// evaluated in the cancellation-free form when 2 alpha x_prev - W < 0.
// Throws ContractError for any other utility kind.
double closed_form_wlog(const RateProblem& p);

}  // namespace proxbp

#endif  // PROXBP_RATE_SOLVER_HPP_
