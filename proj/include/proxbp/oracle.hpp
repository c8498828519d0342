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

#ifndef PROXBP_ORACLE_HPP_
#define PROXBP_ORACLE_HPP_

// Centralized optimum of
//   max sum_f U_f(x_f)
//   s.t. g_n^(f)(y) <= 0            for n != Dst(f)
//        sum_f mu_l^(f) <= C_l,  mu >= 0,  mu_l^(f) = 0 for f not in S_l
// solved with a log-barrier interior-point method and certified by the
// exact dual function of the flow-balance constraints.

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "proxbp/network.hpp"

namespace proxbp {

inline constexpr double kDefaultOracleTol = 1e-6;

struct OracleSolution {
  DecisionVector y_star;
  double U_star = 0.0;
  NodeField lambda_star;  // >= 0, zero at destinations
  double max_violation = 0.0;
  // q(lambda_star) - U_star; nonnegative up to rounding.
  double duality_gap = 0.0;
  // Smallest q(lambda_k) - U(y_k) over the outer iterations; negative only
  // if weak duality failed.
  double weak_duality_margin = 0.0;
  int outer_iterations = 0;
  int newton_iterations = 0;
  // Filled in by compute_zeta when alpha is known; NaN otherwise.
  double zeta = std::numeric_limits<double>::quiet_NaN();
};

// Dual function q(lambda) = sup over the capacity/allow set of
// sum_f U_f(x_f) - sum lambda g(y). +inf if some weighted-log source has
// lambda <= 0 at its source.
double dual_value(const Scenario& scenario, const NodeField& lambda);

// Throws ValidationError when some weighted-log session cannot reach its
// destination over allowed links (no feasible point) and NumericError if
// the Newton iterations do not converge; the message carries the best gap.
OracleSolution solve_centralized(const Scenario& scenario,
                                 double tol = kDefaultOracleTol);

// Makes every flow-balance constraint tight without touching x: cancels
// positive-flow cycles of each session, then lowers outgoing rates of
// slack nodes in topological order (ascending link index at each node).
// Requires y feasible.
DecisionVector tighten_to_equality(const Scenario& scenario,
                                   const DecisionVector& y);

// Phi = sum_{f, n != Dst(f)} alpha_n |y_n^(f),* - y_n^(f)|^2
//     + sum_f alpha_Dst(f) sum_{l in I(Dst(f))} (mu_l^(f),* - mu_l^(f))^2
double phi(const Scenario& scenario, const DecisionVector& y_star,
           const DecisionVector& y, std::span<const double> alpha);

// zeta = Phi evaluated at y = 0.
double compute_zeta(const Scenario& scenario, const DecisionVector& y_star,
                    std::span<const double> alpha);

// Euclidean norm over non-destination entries.
double lambda_norm(const Scenario& scenario, const NodeField& lambda);

// Text report:
//   U_star <v>
//   duality_gap <v>
//   max_violation <v>
//   weak_duality_margin <v>
//   x <session_id> <v>
//   mu <link> <session_id> <v>        (nonzero entries)
//   lambda <session_id> <node> <v>    (non-destination entries)
// zeta is not stored; it depends on alpha.
std::string serialize_oracle(const Scenario& scenario,
                             const OracleSolution& sol);
OracleSolution parse_oracle(const Scenario& scenario, std::string_view text);
OracleSolution load_oracle(const Scenario& scenario, const std::string& path);
void save_oracle(const Scenario& scenario, const OracleSolution& sol,
                 const std::string& path);

}  // namespace proxbp

#endif  // PROXBP_ORACLE_HPP_
