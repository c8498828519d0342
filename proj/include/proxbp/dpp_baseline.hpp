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

#ifndef PROXBP_DPP_BASELINE_HPP_
#define PROXBP_DPP_BASELINE_HPP_

// Drift-plus-penalty backpressure on clipped queues Q >= 0:
//   x_f = argmax_{x in [0, x_max_f] cap dom U_f} V U_f(x) - Q_Src(f)^(f) x
//   link (n,m): full capacity to the allowed session with the largest
//   positive Q_n^(f) - Q_m^(f) (lowest index on ties), idle otherwise
//   Q <- max{Q + g(y), 0}

#include <vector>

#include "proxbp/network.hpp"

namespace proxbp {

struct DppConfig {
  double V = 500.0;
  // Per-session cap on x; empty means the out-capacity of each source.
  std::vector<double> x_max;

  // ContractError on V <= 0, wrong length or nonpositive caps.
  void validate(const Scenario& scenario) const;
  double cap(const Scenario& scenario, int f) const;
};

// Maximizer of V U(x) - q x over [0, x_max] cap dom U, in closed form.
double dpp_source_rate(const Utility& u, double V, double q, double x_max);

// Session granted link l, or -1 when no allowed differential is positive.
int dpp_link_winner(int l, const NodeField& Q, const Scenario& scenario);

DecisionVector dpp_slot_update(const NodeField& Q, const Scenario& scenario,
                               const DppConfig& config);
// OpenMP split over sessions and links; bit-identical to the serial rule.
DecisionVector dpp_slot_update_parallel(const NodeField& Q,
                                        const Scenario& scenario,
                                        const DppConfig& config);

}  // namespace proxbp

#endif  // PROXBP_DPP_BASELINE_HPP_
