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

#ifndef PROXBP_PROX_BACKPRESSURE_HPP_
#define PROXBP_PROX_BACKPRESSURE_HPP_

// Proximal backpressure. Per slot t:
//   W_n^(f)[t] = Q_n^(f)[t] + g_n^(f)(y[t-1]),   W_Dst(f)^(f) = 0
//   x_f[t]     = argmax U_f(x) - W_Src(f) x - alpha_Src(f) (x - x_f[t-1])^2
//   mu_(n,m)[t] = capped-simplex projection of
//                 a_f = mu_(n,m)^(f)[t-1] + (W_n - W_m) / (2 (alpha_n + alpha_m))
//                 onto {sum_f mu <= C, mu >= 0}, f in S_(n,m)
//   Q[t+1]     = Q[t] + g(y[t])

#include <cstdint>
#include <span>
#include <vector>

#include "proxbp/network.hpp"

namespace proxbp {

enum class AlphaMode {
  kUtilityGap,  // 1/2 (d_n + 1)
  kQueueBound,  // 1/2 (d_n + 1)^2
};

// Per-node alpha for the given mode, multiplied by `scale`.
std::vector<double> default_alpha(const Network& network, AlphaMode mode,
                                  double scale = 1.0);

struct AlgConfig {
  std::vector<double> alpha;  // per node, all > 0

  static AlgConfig defaults(const Network& network,
                            AlphaMode mode = AlphaMode::kQueueBound,
                            double scale = 1.0) {
    return {default_alpha(network, mode, scale)};
  }
  // ContractError unless alpha has one positive finite entry per node.
  void validate(const Network& network) const;
};

struct BpState {
  NodeField q;
  DecisionVector y_prev;
  std::int64_t slot = 0;

  static BpState initial(const Scenario& scenario);
};

NodeField compute_weights(const BpState& state, const Scenario& scenario);

// Rates for every session on link l (0 for f not in S_l). `mu_prev` holds
// the link's rates from the previous slot, one per session.
std::vector<double> link_update(int l, const NodeField& W,
                                std::span<const double> alpha,
                                std::span<const double> mu_prev,
                                const Scenario& scenario);

struct SlotResult {
  DecisionVector y;  // decisions for slot t
  NodeField w;       // W[t]
  NodeField g;       // g(y[t]), zero at destinations
  BpState next;      // Q[t+1], y_prev = y[t], slot t + 1
};

SlotResult slot_update(const BpState& state, const Scenario& scenario,
                       const AlgConfig& config);

// OpenMP version of slot_update: sources, links and queue entries are split
// across threads. Every value is computed by the same expression as in the
// serial path, so results are bit-identical.
SlotResult slot_update_parallel(const BpState& state, const Scenario& scenario,
                                const AlgConfig& config);

// 1/2 sum of Q^2 over non-destination entries.
double lyapunov(const NodeField& q);
inline double lyapunov(const BpState& state) { return lyapunov(state.q); }

}  // namespace proxbp

#endif  // PROXBP_PROX_BACKPRESSURE_HPP_
