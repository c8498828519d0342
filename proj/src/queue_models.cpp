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

#include "proxbp/queue_models.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "proxbp/errors.hpp"

namespace proxbp {

QueueTriple QueueTriple::zeros(const Scenario& scenario) {
  return {NodeField::zeros(scenario), NodeField::zeros(scenario),
          NodeField::zeros(scenario)};
}

NodeField source_injection(const Scenario& scenario, const DecisionVector& y) {
  NodeField inj = NodeField::zeros(scenario);
  for (int f = 0; f < scenario.session_count(); ++f) {
    inj.at(f, scenario.session(f).src) = y.x[f];
  }
  return inj;
}

NodeField net_inflow(const Scenario& scenario, const NodeField& injection,
                     std::span<const double> mu) {
  const Network& net = scenario.network();
  const int F = scenario.session_count();
  NodeField g = NodeField::zeros(scenario);
  for (int f = 0; f < F; ++f) {
    const int dst = scenario.session(f).dst;
    for (int n = 0; n < net.node_count(); ++n) {
      if (n == dst) continue;
      double v = injection.at(f, n);
      for (int l : net.incoming(n)) v += mu[l * F + f];
      for (int l : net.outgoing(n)) v -= mu[l * F + f];
      g.at(f, n) = v;
    }
  }
  return g;
}

NodeField step_Y(const NodeField& Y, const DecisionVector& y,
                 const Scenario& scenario) {
  return step_Y(Y, source_injection(scenario, y), y.mu, scenario);
}

NodeField step_Y(const NodeField& Y, const NodeField& injection,
                 std::span<const double> mu, const Scenario& scenario) {
  NodeField next = net_inflow(scenario, injection, mu);
  for (size_t i = 0; i < next.values.size(); ++i) {
    next.values[i] = std::max(Y.values[i] + next.values[i], 0.0);
  }
  return next;
}

ZStep step_Z(const NodeField& Z, const DecisionVector& y,
             const Scenario& scenario) {
  return step_Z(Z, source_injection(scenario, y), y.mu, scenario);
}

ZStep step_Z(const NodeField& Z, const NodeField& injection,
             std::span<const double> mu, const Scenario& scenario,
             std::span<const double> destination_drain) {
  const Network& net = scenario.network();
  const int F = scenario.session_count();
  const int N = net.node_count();
  ZStep out{NodeField::zeros(scenario),
            std::vector<double>(static_cast<size_t>(net.link_count()) * F, 0.0)};
  const bool drained = !destination_drain.empty();

  for (int f = 0; f < F; ++f) {
    const int dst = scenario.session(f).dst;
    for (int n = 0; n < N; ++n) {
      double remaining = Z.at(f, n);
      if (n == dst) {
        if (drained) {
          remaining = std::max(remaining - destination_drain[n], 0.0);
        }
      } else {
        for (int l : net.outgoing(n)) {
          const double send = std::min(mu[l * F + f], remaining);
          out.sent[l * F + f] = send;
          remaining -= send;
        }
      }
      out.z.at(f, n) = remaining;
    }
    for (int n = 0; n < N; ++n) {
      if (n == dst && !drained) {
        out.z.at(f, n) = 0.0;
        continue;
      }
      double arrivals = injection.at(f, n);
      for (int l : net.incoming(n)) arrivals += out.sent[l * F + f];
      out.z.at(f, n) += arrivals;
    }
  }
  return out;
}

NodeField step_Q(const NodeField& Q, const DecisionVector& y,
                 const Scenario& scenario) {
  return step_Q(Q, source_injection(scenario, y), y.mu, scenario);
}

NodeField step_Q(const NodeField& Q, const NodeField& injection,
                 std::span<const double> mu, const Scenario& scenario) {
  NodeField next = net_inflow(scenario, injection, mu);
  for (size_t i = 0; i < next.values.size(); ++i) {
    next.values[i] += Q.values[i];
  }
  return next;
}

Lemma1Report check_lemma1(std::span<const QueueTriple> trace, double B,
                          const Scenario& scenario, double tol) {
  const Network& net = scenario.network();
  Lemma1Report report;
  for (size_t s = 0; s < trace.size(); ++s) {
    for (int f = 0; f < scenario.session_count(); ++f) {
      const int dst = scenario.session(f).dst;
      for (int n = 0; n < net.node_count(); ++n) {
        if (n == dst) continue;
        const double bound = 2.0 * B + net.out_capacity(n);
        const double yv = trace[s].y.at(f, n);
        const double zv = trace[s].z.at(f, n);
        if (yv > bound + tol) report.violations.push_back({s, f, n, 'Y', yv, bound});
        if (zv > bound + tol) report.violations.push_back({s, f, n, 'Z', zv, bound});
      }
    }
  }
  return report;
}

namespace {

std::vector<int> topological_order(const Network& net) {
  const int N = net.node_count();
  std::vector<int> indeg(N, 0);
  for (const Link& link : net.links()) ++indeg[link.head];
  std::queue<int> ready;
  for (int n = 0; n < N; ++n) {
    if (indeg[n] == 0) ready.push(n);
  }
  std::vector<int> order;
  order.reserve(N);
  while (!ready.empty()) {
    const int n = ready.front();
    ready.pop();
    order.push_back(n);
    for (int l : net.outgoing(n)) {
      if (--indeg[net.link(l).head] == 0) ready.push(net.link(l).head);
    }
  }
  if (static_cast<int>(order.size()) != N) {
    throw ContractError("instant forwarding needs an acyclic network");
  }
  return order;
}

}  // namespace

std::vector<double> instant_forwarding_flows(const Scenario& scenario,
                                             const NodeField& Y,
                                             const NodeField& injection,
                                             std::span<const double> mu) {
  const Network& net = scenario.network();
  const int F = scenario.session_count();
  const std::vector<int> order = topological_order(net);
  std::vector<double> flows(static_cast<size_t>(net.link_count()) * F, 0.0);
  for (int f = 0; f < F; ++f) {
    const int dst = scenario.session(f).dst;
    for (int n : order) {
      if (n == dst) continue;
      double present = Y.at(f, n) + injection.at(f, n);
      for (int l : net.incoming(n)) present += flows[l * F + f];
      for (int l : net.outgoing(n)) {
        const double send = std::min(mu[l * F + f], present);
        flows[l * F + f] = send;
        present -= send;
      }
    }
  }
  return flows;
}

ScriptedReplay replay_scripted(const Scenario& scenario,
                               const ScriptedPolicy& policy, int slots) {
  if (policy.period < 1 ||
      static_cast<int>(policy.arrivals.size()) != policy.period ||
      static_cast<int>(policy.mu.size()) != policy.period) {
    throw ContractError("scripted policy does not cover its period");
  }
  ScriptedReplay replay;
  replay.queues.reserve(slots);
  QueueTriple state = QueueTriple::zeros(scenario);
  for (int s = 1; s <= slots; ++s) {
    const NodeField& inj = policy.arrivals_at(s);
    const std::vector<double>& mu = policy.mu_at(s);
    const std::vector<double> realized =
        instant_forwarding_flows(scenario, state.y, inj, mu);
    QueueTriple next;
    next.y = step_Y(state.y, inj, realized, scenario);
    next.z = step_Z(state.z, inj, mu, scenario, policy.destination_drain).z;
    next.q = step_Q(state.q, inj, mu, scenario);
    state = std::move(next);
    replay.queues.push_back(state);
  }
  return replay;
}

}  // namespace proxbp
