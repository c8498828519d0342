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

#include "proxbp/dpp_baseline.hpp"

#include <algorithm>
#include <cmath>

#include "proxbp/errors.hpp"

namespace proxbp {

void DppConfig::validate(const Scenario& scenario) const {
  if (!(V > 0.0) || !std::isfinite(V)) throw ContractError("V must be positive");
  if (!x_max.empty() &&
      static_cast<int>(x_max.size()) != scenario.session_count()) {
    throw ContractError("x_max needs one entry per session");
  }
  for (int f = 0; f < scenario.session_count(); ++f) {
    if (!(cap(scenario, f) > 0.0)) {
      throw ContractError("x_max must be positive for every session");
    }
  }
}

double DppConfig::cap(const Scenario& scenario, int f) const {
  if (!x_max.empty()) return x_max[f];
  return scenario.network().out_capacity(scenario.session(f).src);
}

double dpp_source_rate(const Utility& u, double V, double q, double x_max) {
  // V w / (x + shift) = q at an interior optimum.
  const double shift = u.kind() == UtilityKind::kWeightedLog ? 0.0 : 1.0;
  if (q <= 0.0) return x_max;
  const double x = V * u.weight() / q - shift;
  return std::clamp(x, 0.0, x_max);
}

int dpp_link_winner(int l, const NodeField& Q, const Scenario& scenario) {
  const Link& link = scenario.network().link(l);
  int best = -1;
  double best_diff = 0.0;
  for (int f = 0; f < scenario.session_count(); ++f) {
    if (!scenario.allowed(l, f)) continue;
    const double diff = Q.at(f, link.tail) - Q.at(f, link.head);
    if (diff > best_diff) {
      best = f;
      best_diff = diff;
    }
  }
  return best;
}

namespace {

void source_into(const NodeField& Q, const Scenario& scenario,
                 const DppConfig& config, int f, DecisionVector& y) {
  const Session& s = scenario.session(f);
  y.x[f] = dpp_source_rate(s.utility, config.V, Q.at(f, s.src),
                           config.cap(scenario, f));
}

void link_into(const NodeField& Q, const Scenario& scenario, int l,
               DecisionVector& y) {
  const int winner = dpp_link_winner(l, Q, scenario);
  if (winner >= 0) y.rate(l, winner) = scenario.network().link(l).capacity;
}

}  // namespace

DecisionVector dpp_slot_update(const NodeField& Q, const Scenario& scenario,
                               const DppConfig& config) {
  DecisionVector y = DecisionVector::zeros(scenario);
  for (int f = 0; f < scenario.session_count(); ++f) {
    source_into(Q, scenario, config, f, y);
  }
  for (int l = 0; l < scenario.link_count(); ++l) link_into(Q, scenario, l, y);
  return y;
}

DecisionVector dpp_slot_update_parallel(const NodeField& Q,
                                        const Scenario& scenario,
                                        const DppConfig& config) {
  DecisionVector y = DecisionVector::zeros(scenario);
  const int F = scenario.session_count();
  const int L = scenario.link_count();
#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (int f = 0; f < F; ++f) source_into(Q, scenario, config, f, y);
#pragma omp for schedule(static)
    for (int l = 0; l < L; ++l) link_into(Q, scenario, l, y);
  }
  return y;
}

}  // namespace proxbp
