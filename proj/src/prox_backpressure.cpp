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

#include "proxbp/prox_backpressure.hpp"

#include <cmath>
#include <exception>
#include <string>

#include "proxbp/capped_simplex.hpp"
#include "proxbp/errors.hpp"
#include "proxbp/rate_solver.hpp"

namespace proxbp {

std::vector<double> default_alpha(const Network& network, AlphaMode mode,
                                  double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw ContractError("alpha scale must be positive");
  }
  std::vector<double> alpha(network.node_count());
  for (int n = 0; n < network.node_count(); ++n) {
    const double d1 = network.degree(n) + 1.0;
    alpha[n] = scale * (mode == AlphaMode::kUtilityGap ? 0.5 * d1 : 0.5 * d1 * d1);
  }
  return alpha;
}

void AlgConfig::validate(const Network& network) const {
  if (static_cast<int>(alpha.size()) != network.node_count()) {
    throw ContractError("alpha needs one entry per node");
  }
  for (size_t n = 0; n < alpha.size(); ++n) {
    if (!(alpha[n] > 0.0) || !std::isfinite(alpha[n])) {
      throw ContractError("alpha at node " + std::to_string(n) +
                          " must be positive");
    }
  }
}

BpState BpState::initial(const Scenario& scenario) {
  return {NodeField::zeros(scenario), DecisionVector::zeros(scenario), 0};
}

namespace {

// g for one session, all nodes.
void residuals_for(const Scenario& scenario, int f, const DecisionVector& y,
                   NodeField& out) {
  const Network& net = scenario.network();
  const int F = scenario.session_count();
  const Session& s = scenario.session(f);
  for (int n = 0; n < net.node_count(); ++n) {
    if (n == s.dst) {
      out.at(f, n) = 0.0;
      continue;
    }
    double v = n == s.src ? y.x[f] : 0.0;
    for (int l : net.incoming(n)) v += y.mu[l * F + f];
    for (int l : net.outgoing(n)) v -= y.mu[l * F + f];
    out.at(f, n) = v;
  }
}

void weights_for(const Scenario& scenario, int f, const BpState& state,
                 NodeField& w) {
  residuals_for(scenario, f, state.y_prev, w);
  const int dst = scenario.session(f).dst;
  for (int n = 0; n < scenario.node_count(); ++n) {
    if (n != dst) w.at(f, n) += state.q.at(f, n);
  }
}

double source_rate(const Scenario& scenario, int f, const NodeField& w,
                   const BpState& state, const AlgConfig& config) {
  const Session& s = scenario.session(f);
  const RateProblem p{s.utility, w.at(f, s.src), state.y_prev.x[f],
                      config.alpha[s.src]};
  return s.utility.kind() == UtilityKind::kWeightedLog ? closed_form_wlog(p)
                                                       : solve_rate(p);
}

void link_into(int l, const NodeField& w, std::span<const double> alpha,
               std::span<const double> mu_prev, const Scenario& scenario,
               std::span<double> out) {
  const Link& link = scenario.network().link(l);
  const int F = scenario.session_count();
  const double denom = 2.0 * (alpha[link.tail] + alpha[link.head]);
  std::vector<double> a;
  std::vector<int> members;
  a.reserve(F);
  members.reserve(F);
  for (int f = 0; f < F; ++f) {
    out[f] = 0.0;
    if (!scenario.allowed(l, f)) continue;
    members.push_back(f);
    a.push_back(mu_prev[f] + (w.at(f, link.tail) - w.at(f, link.head)) / denom);
  }
  if (members.empty()) return;
  const Projection proj = project_sorted(a, link.capacity);
  for (size_t k = 0; k < members.size(); ++k) out[members[k]] = proj.z[k];
}

SlotResult empty_result(const Scenario& scenario, const BpState& state) {
  SlotResult r{DecisionVector::zeros(scenario), NodeField::zeros(scenario),
               NodeField::zeros(scenario),
               {NodeField::zeros(scenario), {}, state.slot + 1}};
  return r;
}

}  // namespace

NodeField compute_weights(const BpState& state, const Scenario& scenario) {
  NodeField w = NodeField::zeros(scenario);
  for (int f = 0; f < scenario.session_count(); ++f) {
    weights_for(scenario, f, state, w);
  }
  return w;
}

std::vector<double> link_update(int l, const NodeField& W,
                                std::span<const double> alpha,
                                std::span<const double> mu_prev,
                                const Scenario& scenario) {
  std::vector<double> out(scenario.session_count(), 0.0);
  link_into(l, W, alpha, mu_prev, scenario, out);
  return out;
}

SlotResult slot_update(const BpState& state, const Scenario& scenario,
                       const AlgConfig& config) {
  const int F = scenario.session_count();
  const int L = scenario.link_count();
  SlotResult r = empty_result(scenario, state);
  for (int f = 0; f < F; ++f) weights_for(scenario, f, state, r.w);
  for (int f = 0; f < F; ++f) {
    r.y.x[f] = source_rate(scenario, f, r.w, state, config);
  }
  for (int l = 0; l < L; ++l) {
    link_into(l, r.w, config.alpha, state.y_prev.link_rates(l), scenario,
              r.y.link_rates(l));
  }
  for (int f = 0; f < F; ++f) residuals_for(scenario, f, r.y, r.g);
  for (size_t i = 0; i < r.g.values.size(); ++i) {
    r.next.q.values[i] = state.q.values[i] + r.g.values[i];
  }
  r.next.y_prev = r.y;
  return r;
}

SlotResult slot_update_parallel(const BpState& state, const Scenario& scenario,
                                const AlgConfig& config) {
  const int F = scenario.session_count();
  const int L = scenario.link_count();
  SlotResult r = empty_result(scenario, state);
  const std::int64_t entries = static_cast<std::int64_t>(r.g.values.size());
  // Exceptions cannot cross the parallel region; the first one is kept and
  // rethrown after the barrier.
  std::exception_ptr failure;
#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (int f = 0; f < F; ++f) weights_for(scenario, f, state, r.w);
#pragma omp for schedule(static)
    for (int f = 0; f < F; ++f) {
      try {
        r.y.x[f] = source_rate(scenario, f, r.w, state, config);
      } catch (...) {
#pragma omp critical(proxbp_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp for schedule(dynamic, 16)
    for (int l = 0; l < L; ++l) {
      link_into(l, r.w, config.alpha, state.y_prev.link_rates(l), scenario,
                r.y.link_rates(l));
    }
#pragma omp for schedule(static)
    for (int f = 0; f < F; ++f) residuals_for(scenario, f, r.y, r.g);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < entries; ++i) {
      r.next.q.values[i] = state.q.values[i] + r.g.values[i];
    }
  }
  if (failure) std::rethrow_exception(failure);
  r.next.y_prev = r.y;
  return r;
}

double lyapunov(const NodeField& q) {
  double sum = 0.0;
  for (double v : q.values) sum += v * v;
  return 0.5 * sum;
}

}  // namespace proxbp
