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

#ifndef PROXBP_QUEUE_MODELS_HPP_
#define PROXBP_QUEUE_MODELS_HPP_

// Three queue families driven by the same decisions:
//   Y  virtual, clipped:   Y <- max{Y + inj + sum_in mu - sum_out mu, 0}
//   Z  physical:           service from the backlog present at slot start,
//                          then arrivals (upstream actual sends + inj)
//   Q  virtual, signed:    Q <- Q + inj + sum_in mu - sum_out mu
// `inj` is x_f at Src(f) for algorithm runs, or an exogenous arrival field
// for scripted replays. Entries at Dst(f) stay 0 unless a destination drain
// is supplied to step_Z.

#include <span>
#include <vector>

#include "proxbp/network.hpp"

namespace proxbp {

struct QueueTriple {
  NodeField y;
  NodeField z;
  NodeField q;

  static QueueTriple zeros(const Scenario& scenario);
};

// x_f placed at (f, Src(f)).
NodeField source_injection(const Scenario& scenario, const DecisionVector& y);

// inj + sum_in mu - sum_out mu at every non-destination (f, n).
NodeField net_inflow(const Scenario& scenario, const NodeField& injection,
                     std::span<const double> mu);

NodeField step_Y(const NodeField& Y, const DecisionVector& y,
                 const Scenario& scenario);
NodeField step_Y(const NodeField& Y, const NodeField& injection,
                 std::span<const double> mu, const Scenario& scenario);

struct ZStep {
  NodeField z;
  // Actual amount moved per (link, session), link-major like
  // DecisionVector::mu.
  std::vector<double> sent;
};

// Each node serves its outgoing links in ascending link index, link l
// taking min(mu_l, remaining backlog). `destination_drain` (per node, may
// be empty) gives destinations a finite exit rate; without it destination
// data is consumed on arrival. Data addressed to Dst(f) never leaves it.
ZStep step_Z(const NodeField& Z, const DecisionVector& y,
             const Scenario& scenario);
ZStep step_Z(const NodeField& Z, const NodeField& injection,
             std::span<const double> mu, const Scenario& scenario,
             std::span<const double> destination_drain = {});

NodeField step_Q(const NodeField& Q, const DecisionVector& y,
                 const Scenario& scenario);
NodeField step_Q(const NodeField& Q, const NodeField& injection,
                 std::span<const double> mu, const Scenario& scenario);

struct Lemma1Violation {
  size_t slot = 0;
  int session = 0;
  int node = 0;
  char family = 'Z';  // 'Y' or 'Z'
  double value = 0.0;
  double bound = 0.0;
};

struct Lemma1Report {
  std::vector<Lemma1Violation> violations;
  bool ok() const { return violations.empty(); }
};

// With |Q| <= B along the trace, Y and Z must stay below
// 2B + sum_{O(n)} C_l at every non-destination node. Lists every entry that
// does not. `tol` is an absolute slack for floating accumulation.
Lemma1Report check_lemma1(std::span<const QueueTriple> trace, double B,
                          const Scenario& scenario, double tol = 1e-9);

// Periodic exogenous schedule: arrivals per (session, node) and prescribed
// mu per (link, session) for each slot of one period. Slots are 1-based;
// slot s uses entry (s - 1) % period.
struct ScriptedPolicy {
  int period = 1;
  std::vector<NodeField> arrivals;
  std::vector<std::vector<double>> mu;
  std::vector<double> destination_drain;

  const NodeField& arrivals_at(int slot) const {
    return arrivals[(slot - 1) % period];
  }
  const std::vector<double>& mu_at(int slot) const {
    return mu[(slot - 1) % period];
  }
};

// Flows realized when data may cross any number of hops within the slot it
// arrives: nodes are visited in topological order and link l carries
// min(mu_l, data present at its tail this slot). Requires an acyclic
// network (ContractError otherwise).
std::vector<double> instant_forwarding_flows(const Scenario& scenario,
                                             const NodeField& Y,
                                             const NodeField& injection,
                                             std::span<const double> mu);

struct ScriptedReplay {
  // queues[s - 1] is the state at the end of slot s.
  std::vector<QueueTriple> queues;
};

// Replays `slots` slots of the policy. Z follows step_Z with the prescribed
// mu (store-and-forward), Y follows step_Y applied to the instant-forwarding
// realization of the same prescribed mu, and Q follows step_Q with the
// prescribed mu.
ScriptedReplay replay_scripted(const Scenario& scenario,
                               const ScriptedPolicy& policy, int slots);

}  // namespace proxbp

#endif  // PROXBP_QUEUE_MODELS_HPP_
