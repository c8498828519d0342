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

#ifndef PROXBP_NETWORK_HPP_
#define PROXBP_NETWORK_HPP_

// Network model: directed graph with link capacities, sessions with
// concave utilities, per-link allowed-session sets, and the per-slot
// decision vector (source rates x_f and link-session rates mu_l^(f)).

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace proxbp {

// Absolute slack allowed on link capacity checks.
inline constexpr double kCapacityTolerance = 1e-9;

struct Link {
  int tail = 0;
  int head = 0;
  double capacity = 0.0;

  bool operator==(const Link&) const = default;
};

// Immutable directed graph. Link indices are 0-based in construction order
// and every tie-break elsewhere in the library follows that order.
class Network {
 public:
  Network() = default;
  // Throws ValidationError on self-loops, nonpositive capacities or
  // endpoints outside [0, node_count).
  Network(int node_count, std::vector<Link> links);

  int node_count() const { return node_count_; }
  int link_count() const { return static_cast<int>(links_.size()); }
  const Link& link(int l) const { return links_[l]; }
  std::span<const Link> links() const { return links_; }

  // I(n) and O(n), ascending link index.
  std::span<const int> incoming(int n) const { return incoming_[n]; }
  std::span<const int> outgoing(int n) const { return outgoing_[n]; }

  // d_n = |I(n)| + |O(n)|.
  int degree(int n) const;
  // Sum of C_l over O(n).
  double out_capacity(int n) const;

  bool operator==(const Network& other) const {
    return node_count_ == other.node_count_ && links_ == other.links_;
  }

 private:
  int node_count_ = 0;
  std::vector<Link> links_;
  std::vector<std::vector<int>> incoming_;
  std::vector<std::vector<int>> outgoing_;
};

enum class UtilityKind { kWeightedLog, kWeightedLog1p };

// Concave session utility. Exposes value, derivative and the domain marker;
// any new kind has to supply the same three.
//   kWeightedLog:   w log(x),     dom = (0, inf)
//   kWeightedLog1p: w log(1 + x), dom = [0, inf)
class Utility {
 public:
  static Utility weighted_log(double weight);
  static Utility weighted_log1p(double weight);

  UtilityKind kind() const { return kind_; }
  double weight() const { return weight_; }
  bool open_domain() const { return kind_ == UtilityKind::kWeightedLog; }
  bool in_domain(double x) const;

  // Both throw DomainError outside the domain.
  double value(double x) const;
  double derivative(double x) const;

  bool operator==(const Utility&) const = default;

 private:
  Utility(UtilityKind kind, double weight);

  UtilityKind kind_ = UtilityKind::kWeightedLog;
  double weight_ = 1.0;
};

std::string_view utility_kind_name(UtilityKind kind);

struct Session {
  int id = 0;
  int src = 0;
  int dst = 0;
  Utility utility = Utility::weighted_log(1.0);

  bool operator==(const Session&) const = default;
};

// Network plus sessions plus S_l. Sessions are addressed by position
// (0..F-1); `Session::id` is the external label used in scenario files.
class Scenario {
 public:
  Scenario() = default;
  // `allowed` is indexed [link][session position]; empty means every session
  // may use every link. Throws ValidationError on dangling references,
  // src == dst or duplicate session ids.
  Scenario(Network network, std::vector<Session> sessions,
           std::vector<std::vector<bool>> allowed = {});

  const Network& network() const { return network_; }
  std::span<const Session> sessions() const { return sessions_; }
  const Session& session(int f) const { return sessions_[f]; }
  int session_count() const { return static_cast<int>(sessions_.size()); }
  int node_count() const { return network_.node_count(); }
  int link_count() const { return network_.link_count(); }

  bool allowed(int l, int f) const { return allowed_[l][f]; }
  // S_l as session positions, ascending.
  std::vector<int> allowed_sessions(int l) const;
  // True when S_l is the full session set.
  bool allows_all(int l) const;
  // Position of the session with external id `id`, or -1.
  int session_index(int id) const;

  bool operator==(const Scenario&) const = default;

 private:
  Network network_;
  std::vector<Session> sessions_;
  std::vector<std::vector<bool>> allowed_;
};

// One slot's decisions y = [x_f; mu_l^(f)]. mu is stored link-major.
struct DecisionVector {
  int session_count = 0;
  std::vector<double> x;
  std::vector<double> mu;

  static DecisionVector zeros(const Scenario& scenario);

  double& rate(int l, int f) { return mu[l * session_count + f]; }
  double rate(int l, int f) const { return mu[l * session_count + f]; }
  std::span<double> link_rates(int l) {
    return std::span<double>(mu).subspan(l * session_count, session_count);
  }
  std::span<const double> link_rates(int l) const {
    return std::span<const double>(mu).subspan(l * session_count,
                                               session_count);
  }

  bool operator==(const DecisionVector&) const = default;
};

// Per (session, node) real field, session-major. Used for Q, W, Y, Z,
// residuals and multipliers. Entries at n = Dst(f) are kept at zero.
struct NodeField {
  int node_count = 0;
  std::vector<double> values;

  static NodeField zeros(const Scenario& scenario);

  double& at(int f, int n) { return values[f * node_count + n]; }
  double at(int f, int n) const { return values[f * node_count + n]; }

  bool operator==(const NodeField&) const = default;
};

// Worst violation of the set constraints (capacity, nonnegativity,
// forbidden links, x in dom U) for y; 0 when y is in the set C.
double set_violation(const Scenario& scenario, const DecisionVector& y);

// g_n^(f)(y) = x_f 1{n = Src(f)} + sum_{I(n)} mu - sum_{O(n)} mu.
// Throws ContractError when n = Dst(f), which carries no constraint.
double flow_residual(const Scenario& scenario, int f, int n,
                     const DecisionVector& y);

// All residuals at once; Dst(f) entries are 0.
NodeField flow_residuals(const Scenario& scenario, const DecisionVector& y);

// y_n^(f): x_f (only at the source) followed by mu_l^(f) for l in I(n) and
// then O(n), ascending link index. Defined for every node, including Dst(f).
std::vector<double> local_vector(const Scenario& scenario, int f, int n,
                                 const DecisionVector& y);

// sum_f U_f(x_f). Throws DomainError if some x_f is outside dom(U_f).
double total_utility(const Scenario& scenario, std::span<const double> x);

// Scenario text format:
//   nodes <N>
//   link <tail> <head> <capacity>
//   session <id> <src> <dst> <wlog|wlog1p> <weight>
//   allow <link_index> <session_id|none>
// '#' starts a comment. Any allow line for link l replaces the default
// (all sessions) for that link; "none" alone leaves S_l empty. Throws ParseError (with line) on malformed
// text and ValidationError on dangling references.
Scenario parse_scenario(std::string_view text);
std::string serialize_scenario(const Scenario& scenario);
Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& scenario, const std::string& path);

// Result of expanding fixed paths into sub-sessions.
struct MultipathExpansion {
  Scenario scenario;
  // parent[j] = position in the base scenario of sub-session j.
  std::vector<int> parent;
  // path_index[j] = index of the path within its parent's path list.
  std::vector<int> path_index;
};

// Each (session f, path j) becomes a sub-session with the parent's
// endpoints and utility, allowed exactly on the links of its path. The
// coupling U_f(sum_j x_{f,j}) is not modelled; this is a data transform.
// `paths[f]` lists the paths of base session f as link-index sequences.
// Throws ValidationError if a path is not a directed walk Src(f) -> Dst(f).
MultipathExpansion multipath_expand(
    const Scenario& base, const std::vector<std::vector<std::vector<int>>>& paths);

}  // namespace proxbp

#endif  // PROXBP_NETWORK_HPP_
