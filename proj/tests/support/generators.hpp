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

#ifndef PROXBP_TESTS_GENERATORS_HPP_
#define PROXBP_TESTS_GENERATORS_HPP_

// Hand-rolled random instance generators for property tests. Every
// generator is driven by an explicit std::mt19937_64 so failures replay.

#include <algorithm>
#include <random>
#include <vector>

#include "proxbp/network.hpp"

namespace proxbp::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<double> uniform_vector(Rng& rng, int n, double lo,
                                          double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = uniform(rng, lo, hi);
  return v;
}

// Random connected scenario: a directed path 0 -> 1 -> ... -> N-1 plus
// `extra` random links (no self-loops, duplicates allowed), capacities in
// [0.5, 2], sessions from a random node to a later node on the path so every
// session has a route. Kinds alternate wlog / wlog1p starting at `first_kind`.
inline Scenario random_scenario(Rng& rng, int nodes, int extra, int sessions,
                                UtilityKind first_kind = UtilityKind::kWeightedLog,
                                bool random_allow = false) {
  std::vector<Link> links;
  for (int n = 0; n + 1 < nodes; ++n) {
    links.push_back({n, n + 1, uniform(rng, 0.5, 2.0)});
  }
  for (int e = 0; e < extra; ++e) {
    const int a = uniform_int(rng, 0, nodes - 1);
    int b = uniform_int(rng, 0, nodes - 1);
    if (a == b) b = (a + 1) % nodes;
    links.push_back({a, b, uniform(rng, 0.5, 2.0)});
  }
  std::vector<Session> list;
  for (int f = 0; f < sessions; ++f) {
    const int src = uniform_int(rng, 0, nodes - 2);
    const int dst = uniform_int(rng, src + 1, nodes - 1);
    const bool log_kind = (f % 2 == 0) == (first_kind == UtilityKind::kWeightedLog);
    const double w = uniform(rng, 0.5, 2.0);
    list.push_back({f, src, dst,
                    log_kind ? Utility::weighted_log(w) : Utility::weighted_log1p(w)});
  }
  std::vector<std::vector<bool>> allowed;
  if (random_allow) {
    allowed.assign(links.size(), std::vector<bool>(sessions, true));
    for (size_t l = nodes - 1; l < links.size(); ++l) {
      for (int f = 0; f < sessions; ++f) allowed[l][f] = uniform(rng, 0, 1) < 0.6;
    }
  }
  return Scenario(Network(nodes, std::move(links)), std::move(list),
                  std::move(allowed));
}

// Random point of the feasible set of the capacity/allow constraints
// (flow balance not enforced).
inline DecisionVector random_decisions(Rng& rng, const Scenario& s) {
  DecisionVector y = DecisionVector::zeros(s);
  for (double& x : y.x) x = uniform(rng, 0.01, 2.0);
  for (int l = 0; l < s.link_count(); ++l) {
    double budget = s.network().link(l).capacity;
    for (int f = 0; f < s.session_count(); ++f) {
      if (!s.allowed(l, f)) continue;
      const double v = uniform(rng, 0.0, budget);
      y.rate(l, f) = v;
      budget -= v;
    }
  }
  return y;
}

// 0 -> 1 -> 2 -> 3 with capacity 100, forward shortcuts and backward links
// that only ever carry circulating flow.
struct LineInstance {
  Scenario scenario;
  DecisionVector y;
};

inline LineInstance random_line_instance(Rng& rng) {
  std::vector<Link> links{{0, 1, 100}, {1, 2, 100}, {2, 3, 100},
                          {0, 2, 100}, {1, 3, 100}, {2, 1, 100}, {3, 2, 100}};
  const int F = uniform_int(rng, 1, 3);
  std::vector<Session> sessions;
  for (int f = 0; f < F; ++f) {
    sessions.push_back({f, uniform_int(rng, 0, 2), 3,
                        Utility::weighted_log(uniform(rng, 0.5, 2))});
  }
  Scenario s(Network(4, links), sessions);
  DecisionVector y = DecisionVector::zeros(s);
  for (int f = 0; f < F; ++f) {
    const int src = sessions[f].src;
    y.x[f] = uniform(rng, 0.1, 2.0);
    if (src == 0) y.rate(3, f) = uniform(rng, 0.0, 1.0);
    if (src <= 1) y.rate(4, f) = uniform(rng, 0.0, 1.0);
    // Line links carry everything that arrived plus slack.
    for (int n = src; n < 3; ++n) {
      double in = n == src ? y.x[f] : 0.0;
      for (int l : s.network().incoming(n)) in += y.rate(l, f);
      double out_other = 0.0;
      for (int l : s.network().outgoing(n)) {
        if (l != n) out_other += y.rate(l, f);
      }
      y.rate(n, f) = std::max(in - out_other, 0.0) + uniform(rng, 0.0, 0.5);
    }
    // Circulation on 1 <-> 2 and 2 <-> 3.
    const double c1 = uniform(rng, 0.0, 0.4);
    const double c2 = uniform(rng, 0.0, 0.4);
    if (src <= 1) {
      y.rate(1, f) += c1;
      y.rate(5, f) += c1;
    }
    y.rate(2, f) += c2;
    y.rate(6, f) += c2;
  }
  return {std::move(s), std::move(y)};
}

}  // namespace proxbp::testing

#endif  // PROXBP_TESTS_GENERATORS_HPP_
