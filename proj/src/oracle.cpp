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

#include "proxbp/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <string>
#include <utility>

#include "proxbp/errors.hpp"
#include "text_io.hpp"

namespace proxbp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sup_{x in dom U} U(x) - lambda x.
double conjugate_sup(const Utility& u, double lambda) {
  const double w = u.weight();
  if (u.kind() == UtilityKind::kWeightedLog) {
    if (lambda <= 0.0) return kInf;
    return w * std::log(w / lambda) - w;
  }
  if (lambda <= 0.0) return kInf;
  if (lambda >= w) return 0.0;
  return w * std::log(w / lambda) - w + lambda;
}

// live[f][n]: n = Dst(f) or Dst(f) is reachable from n over links allowed
// for f. dist[f][n]: hop count of that route (-1 when not live).
// fed[f][n]: n is reachable from Src(f); flow elsewhere is pure waste.
struct Reach {
  std::vector<std::vector<char>> live;
  std::vector<std::vector<int>> dist;
  std::vector<std::vector<char>> fed;
};

Reach reachability(const Scenario& scenario) {
  const Network& net = scenario.network();
  const int F = scenario.session_count();
  Reach r{std::vector<std::vector<char>>(F, std::vector<char>(net.node_count(), 0)),
          std::vector<std::vector<int>>(F, std::vector<int>(net.node_count(), -1)),
          std::vector<std::vector<char>>(F, std::vector<char>(net.node_count(), 0))};
  for (int f = 0; f < F; ++f) {
    const int dst = scenario.session(f).dst;
    std::queue<int> frontier;
    r.live[f][dst] = 1;
    r.dist[f][dst] = 0;
    frontier.push(dst);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int l : net.incoming(v)) {
        const int u = net.link(l).tail;
        if (!scenario.allowed(l, f) || r.live[f][u]) continue;
        r.live[f][u] = 1;
        r.dist[f][u] = r.dist[f][v] + 1;
        frontier.push(u);
      }
    }
    const int src = scenario.session(f).src;
    r.fed[f][src] = 1;
    frontier.push(src);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      if (v == dst) continue;
      for (int l : net.outgoing(v)) {
        const int h = net.link(l).head;
        if (!scenario.allowed(l, f) || r.fed[f][h]) continue;
        r.fed[f][h] = 1;
        frontier.push(h);
      }
    }
  }
  return r;
}

struct Row {
  std::vector<std::pair<int, double>> terms;
  double rhs = 0.0;
};

// Barrier formulation over the variables that can carry useful flow.
class BarrierProblem {
 public:
  explicit BarrierProblem(const Scenario& scenario)
      : scenario_(scenario), reach_(reachability(scenario)) {
    const Network& net = scenario.network();
    const int F = scenario.session_count();
    x_var_.assign(F, -1);
    mu_var_.assign(static_cast<size_t>(net.link_count()) * F, -1);
    for (int f = 0; f < F; ++f) {
      const Session& s = scenario.session(f);
      if (reach_.live[f][s.src]) {
        x_var_[f] = add_var();
      } else if (s.utility.open_domain()) {
        throw ValidationError("session " + std::to_string(s.id) +
                              " cannot reach its destination");
      }
    }
    for (int l = 0; l < net.link_count(); ++l) {
      const Link& link = net.link(l);
      for (int f = 0; f < F; ++f) {
        if (!scenario.allowed(l, f)) continue;
        if (link.tail == scenario.session(f).dst) continue;
        if (!reach_.live[f][link.head] || !reach_.fed[f][link.tail]) continue;
        mu_var_[l * F + f] = add_var();
      }
    }
    // Flow balance rows.
    flow_row_.assign(static_cast<size_t>(F) * net.node_count(), -1);
    for (int f = 0; f < F; ++f) {
      const Session& s = scenario.session(f);
      for (int n = 0; n < net.node_count(); ++n) {
        if (n == s.dst || !reach_.live[f][n] || !reach_.fed[f][n]) continue;
        Row row;
        if (n == s.src && x_var_[f] >= 0) row.terms.push_back({x_var_[f], 1.0});
        for (int l : net.incoming(n)) {
          if (const int v = mu_var_[l * F + f]; v >= 0) row.terms.push_back({v, 1.0});
        }
        for (int l : net.outgoing(n)) {
          if (const int v = mu_var_[l * F + f]; v >= 0) row.terms.push_back({v, -1.0});
        }
        flow_row_[f * net.node_count() + n] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
      }
    }
    flow_rows_ = static_cast<int>(rows_.size());
    for (int l = 0; l < net.link_count(); ++l) {
      Row row;
      row.rhs = net.link(l).capacity;
      for (int f = 0; f < F; ++f) {
        if (const int v = mu_var_[l * F + f]; v >= 0) row.terms.push_back({v, 1.0});
      }
      if (!row.terms.empty()) rows_.push_back(std::move(row));
    }
    for (int j = 0; j < var_count_; ++j) rows_.push_back({{{j, -1.0}}, 0.0});
  }

  int var_count() const { return var_count_; }
  int row_count() const { return static_cast<int>(rows_.size()); }

  Eigen::VectorXd slacks(const Eigen::VectorXd& v) const {
    Eigen::VectorXd s(row_count());
    for (int r = 0; r < row_count(); ++r) {
      double ax = 0.0;
      for (auto [j, c] : rows_[r].terms) ax += c * v[j];
      s[r] = rows_[r].rhs - ax;
    }
    return s;
  }

  double utility(const Eigen::VectorXd& v) const {
    double u = 0.0;
    for (int f = 0; f < scenario_.session_count(); ++f) {
      const Utility& uf = scenario_.session(f).utility;
      u += uf.value(x_var_[f] >= 0 ? v[x_var_[f]] : 0.0);
    }
    return u;
  }

  // Change of the barrier objective along v -> v + a step; +inf when the
  // move leaves the strict interior. Works with relative changes so that
  // small decreases survive next to a large objective value.
  double barrier_change(const Eigen::VectorXd& v, const Eigen::VectorXd& step,
                        double a, double t) const {
    double change = 0.0;
    for (const Row& row : rows_) {
      double ax = 0.0, d = 0.0;
      for (auto [j, c] : row.terms) {
        ax += c * v[j];
        d += c * step[j];
      }
      const double rel = -a * d / (row.rhs - ax);
      if (!(rel > -1.0)) return kInf;
      change -= std::log1p(rel);
    }
    for (int f = 0; f < scenario_.session_count(); ++f) {
      const int j = x_var_[f];
      if (j < 0) continue;
      const Utility& u = scenario_.session(f).utility;
      const double shift = u.kind() == UtilityKind::kWeightedLog ? 0.0 : 1.0;
      change -= t * u.weight() * std::log1p(a * step[j] / (v[j] + shift));
    }
    return change;
  }

  void derivatives(const Eigen::VectorXd& v, double t, Eigen::VectorXd& grad,
                   Eigen::MatrixXd& hess) const {
    const Eigen::VectorXd s = slacks(v);
    grad.setZero(var_count_);
    hess.setZero(var_count_, var_count_);
    for (int r = 0; r < row_count(); ++r) {
      const double inv = 1.0 / s[r];
      const auto& terms = rows_[r].terms;
      for (auto [i, ci] : terms) {
        grad[i] += ci * inv;
        for (auto [j, cj] : terms) hess(i, j) += ci * cj * inv * inv;
      }
    }
    for (int f = 0; f < scenario_.session_count(); ++f) {
      const int j = x_var_[f];
      if (j < 0) continue;
      const Utility& u = scenario_.session(f).utility;
      const double shift = u.kind() == UtilityKind::kWeightedLog ? 0.0 : 1.0;
      const double base = v[j] + shift;
      grad[j] -= t * u.weight() / base;
      hess(j, j) += t * u.weight() / (base * base);
    }
  }

  // Strictly feasible start: a shortest-route tree per session carries
  // everything that enters each node plus one unit, every other variable
  // gets one unit, and the whole point is scaled to fit the capacities.
  Eigen::VectorXd interior_start() const {
    const Network& net = scenario_.network();
    const int F = scenario_.session_count();
    Eigen::VectorXd v = Eigen::VectorXd::Ones(var_count_);
    for (int f = 0; f < F; ++f) {
      const Session& s = scenario_.session(f);
      std::vector<int> tree(net.node_count(), -1);
      std::vector<int> order;
      for (int n = 0; n < net.node_count(); ++n) {
        if (n == s.dst || !reach_.live[f][n] || !reach_.fed[f][n]) continue;
        for (int l : net.outgoing(n)) {
          const int h = net.link(l).head;
          if (mu_var_[l * F + f] >= 0 &&
              reach_.dist[f][h] == reach_.dist[f][n] - 1) {
            tree[n] = l;
            break;
          }
        }
        order.push_back(n);
      }
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return reach_.dist[f][a] > reach_.dist[f][b];
      });
      for (int n : order) {
        double need = (n == s.src && x_var_[f] >= 0) ? v[x_var_[f]] : 0.0;
        for (int l : net.incoming(n)) {
          if (const int j = mu_var_[l * F + f]; j >= 0) need += v[j];
        }
        for (int l : net.outgoing(n)) {
          if (const int j = mu_var_[l * F + f]; j >= 0 && l != tree[n]) need -= v[j];
        }
        v[mu_var_[tree[n] * F + f]] = std::max(need, 0.0) + 1.0;
      }
    }
    double scale = 1.0;
    for (int l = 0; l < net.link_count(); ++l) {
      double load = 0.0;
      for (int f = 0; f < F; ++f) {
        if (const int j = mu_var_[l * F + f]; j >= 0) load += v[j];
      }
      if (load > 0.0) scale = std::min(scale, 0.5 * net.link(l).capacity / load);
    }
    return v * scale;
  }

  DecisionVector decisions(const Eigen::VectorXd& v) const {
    DecisionVector y = DecisionVector::zeros(scenario_);
    const int F = scenario_.session_count();
    for (int f = 0; f < F; ++f) {
      if (x_var_[f] >= 0) y.x[f] = v[x_var_[f]];
    }
    for (size_t k = 0; k < mu_var_.size(); ++k) {
      if (mu_var_[k] >= 0) y.mu[k] = v[mu_var_[k]];
    }
    return y;
  }

  // lambda = 1 / (t s) on the flow rows. Dead nodes get the session's
  // largest multiplier, which keeps every link into them from contributing
  // to the dual function; a source that cannot reach its destination
  // additionally needs lambda >= w. Live nodes the source cannot reach keep
  // 0: every link into them starts at another such node.
  NodeField multipliers(const Eigen::VectorXd& v, double t) const {
    const Network& net = scenario_.network();
    const Eigen::VectorXd s = slacks(v);
    NodeField lambda = NodeField::zeros(scenario_);
    for (int f = 0; f < scenario_.session_count(); ++f) {
      const Session& ses = scenario_.session(f);
      double top = 0.0;
      for (int n = 0; n < net.node_count(); ++n) {
        const int r = flow_row_[f * net.node_count() + n];
        if (r < 0) continue;
        lambda.at(f, n) = 1.0 / (t * s[r]);
        top = std::max(top, lambda.at(f, n));
      }
      if (!reach_.live[f][ses.src]) top = std::max(top, ses.utility.weight());
      for (int n = 0; n < net.node_count(); ++n) {
        if (n != ses.dst && !reach_.live[f][n]) lambda.at(f, n) = top;
      }
    }
    return lambda;
  }

 private:
  int add_var() { return var_count_++; }

  const Scenario& scenario_;
  Reach reach_;
  int var_count_ = 0;
  std::vector<int> x_var_;
  std::vector<int> mu_var_;
  std::vector<int> flow_row_;
  std::vector<Row> rows_;
  int flow_rows_ = 0;
};

std::string format_gap(double gap) {
  std::ostringstream out;
  out << gap;
  return out.str();
}

}  // namespace

double dual_value(const Scenario& scenario, const NodeField& lambda) {
  const Network& net = scenario.network();
  const int F = scenario.session_count();
  auto lam = [&](int f, int n) {
    return n == scenario.session(f).dst ? 0.0 : lambda.at(f, n);
  };
  double q = 0.0;
  for (int f = 0; f < F; ++f) {
    const Session& s = scenario.session(f);
    q += conjugate_sup(s.utility, lam(f, s.src));
  }
  for (int l = 0; l < net.link_count(); ++l) {
    const Link& link = net.link(l);
    double best = 0.0;
    for (int f = 0; f < F; ++f) {
      if (!scenario.allowed(l, f)) continue;
      best = std::max(best, lam(f, link.tail) - lam(f, link.head));
    }
    q += link.capacity * best;
  }
  return q;
}

OracleSolution solve_centralized(const Scenario& scenario, double tol) {
  if (!(tol > 0.0)) throw ContractError("oracle tolerance must be positive");
  BarrierProblem prob(scenario);
  const int m = prob.row_count();
  const int nv = prob.var_count();

  Eigen::VectorXd v = prob.interior_start();
  Eigen::VectorXd grad(nv);
  Eigen::MatrixXd hess(nv, nv);

  OracleSolution sol;
  sol.weak_duality_margin = kInf;
  double best_primal = -kInf;
  double best_gap = kInf;
  Eigen::VectorXd best_v = v;
  NodeField best_lambda = NodeField::zeros(scenario);

  constexpr double kGrowth = 10.0;
  constexpr int kNewtonCap = 200;
  constexpr int kOuterCap = 40;
  double t = 1.0;
  for (int outer = 0; outer < kOuterCap; ++outer) {
    for (int it = 0; it < kNewtonCap; ++it) {
      prob.derivatives(v, t, grad, hess);
      // Symmetric diagonal scaling; the raw Hessian spans many orders of
      // magnitude once slacks get small.
      const Eigen::VectorXd d = hess.diagonal().cwiseSqrt().cwiseInverse();
      const Eigen::MatrixXd scaled = d.asDiagonal() * hess * d.asDiagonal();
      // Roundoff can make the factorization report an indefinite matrix;
      // damping keeps the step a descent direction.
      Eigen::LDLT<Eigen::MatrixXd> ldlt(scaled);
      for (double ridge = 1e-14; ldlt.info() != Eigen::Success && ridge < 1e-2;
           ridge *= 100.0) {
        ldlt.compute(scaled + ridge * Eigen::MatrixXd::Identity(nv, nv));
      }
      if (ldlt.info() != Eigen::Success) break;
      const Eigen::VectorXd step =
          d.asDiagonal() * ldlt.solve(-(d.asDiagonal() * grad)).eval();
      const double decrement = -grad.dot(step);
      if (!(decrement > 2e-12)) break;
      double s = 1.0;
      bool moved = false;
      for (int bt = 0; bt < 80; ++bt, s *= 0.5) {
        if (prob.barrier_change(v, step, s, t) <= -0.25 * s * decrement) {
          v += s * step;
          moved = true;
          break;
        }
      }
      ++sol.newton_iterations;
      if (!moved) break;
    }
    ++sol.outer_iterations;

    const double primal = prob.utility(v);
    const NodeField lambda = prob.multipliers(v, t);
    const double dual = dual_value(scenario, lambda);
    best_primal = std::max(best_primal, primal);
    sol.weak_duality_margin = std::min(sol.weak_duality_margin, dual - best_primal);
    const double gap = dual - primal;
    if (gap < best_gap) {
      best_gap = gap;
      best_v = v;
      best_lambda = lambda;
    }
    if (m / t <= tol / 10.0 && best_gap <= tol) break;
    t *= kGrowth;
  }
  if (!(best_gap <= tol)) {
    throw NumericError("oracle did not reach tolerance; best duality gap " +
                       format_gap(best_gap));
  }

  sol.y_star = tighten_to_equality(scenario, prob.decisions(best_v));
  sol.U_star = total_utility(scenario, sol.y_star.x);
  sol.lambda_star = best_lambda;
  sol.duality_gap = dual_value(scenario, best_lambda) - sol.U_star;
  double viol = set_violation(scenario, sol.y_star);
  const NodeField g = flow_residuals(scenario, sol.y_star);
  for (double r : g.values) viol = std::max(viol, r);
  sol.max_violation = viol;
  return sol;
}

DecisionVector tighten_to_equality(const Scenario& scenario,
                                   const DecisionVector& y) {
  const Network& net = scenario.network();
  const int F = scenario.session_count();
  const int N = net.node_count();
  DecisionVector out = y;

  for (int f = 0; f < F; ++f) {
    const int dst = scenario.session(f).dst;
    auto flow = [&](int l) -> double& { return out.mu[l * F + f]; };

    // Cancel cycles of positive flow. Each pass finds one cycle by DFS and
    // removes its bottleneck amount, zeroing at least one link.
    for (;;) {
      std::vector<int> state(N, 0);  // 0 new, 1 on stack, 2 done
      std::vector<int> via(N, -1);   // link used to enter the node
      std::vector<int> cycle;
      for (int root = 0; root < N && cycle.empty(); ++root) {
        if (state[root] != 0) continue;
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        state[root] = 1;
        while (!stack.empty() && cycle.empty()) {
          auto& [n, next] = stack.back();
          const auto outs = net.outgoing(n);
          if (next == outs.size()) {
            state[n] = 2;
            stack.pop_back();
            continue;
          }
          const int l = outs[next++];
          if (!(flow(l) > 0.0)) continue;
          const int h = net.link(l).head;
          if (state[h] == 1) {
            cycle.push_back(l);
            for (int u = n; u != h; u = net.link(via[u]).tail) {
              cycle.push_back(via[u]);
            }
          } else if (state[h] == 0) {
            state[h] = 1;
            via[h] = l;
            stack.push_back({h, 0});
          }
        }
      }
      if (cycle.empty()) break;
      double amount = kInf;
      for (int l : cycle) amount = std::min(amount, flow(l));
      for (int l : cycle) {
        flow(l) = flow(l) == amount ? 0.0 : flow(l) - amount;
      }
    }

    // Topological order of the (now acyclic) positive-flow subgraph.
    std::vector<int> indeg(N, 0);
    std::vector<char> counted(net.link_count(), 0);
    for (int l = 0; l < net.link_count(); ++l) {
      if (flow(l) > 0.0) {
        counted[l] = 1;
        ++indeg[net.link(l).head];
      }
    }
    std::queue<int> ready;
    for (int n = 0; n < N; ++n) {
      if (indeg[n] == 0) ready.push(n);
    }
    while (!ready.empty()) {
      const int n = ready.front();
      ready.pop();
      if (n != dst) {
        double slack = -flow_residual(scenario, f, n, out);
        for (int l : net.outgoing(n)) {
          if (!(slack > 0.0)) break;
          const double cut = std::min(slack, flow(l));
          flow(l) -= cut;
          slack -= cut;
        }
      }
      for (int l : net.outgoing(n)) {
        if (counted[l] && --indeg[net.link(l).head] == 0) {
          ready.push(net.link(l).head);
        }
      }
    }
  }
  return out;
}

double phi(const Scenario& scenario, const DecisionVector& y_star,
           const DecisionVector& y, std::span<const double> alpha) {
  const Network& net = scenario.network();
  const int F = scenario.session_count();
  double sum = 0.0;
  for (int f = 0; f < F; ++f) {
    const Session& s = scenario.session(f);
    for (int n = 0; n < net.node_count(); ++n) {
      double sq = 0.0;
      auto add = [&](int l) {
        const double d = y_star.mu[l * F + f] - y.mu[l * F + f];
        sq += d * d;
      };
      for (int l : net.incoming(n)) add(l);
      if (n != s.dst) {
        if (n == s.src) {
          const double d = y_star.x[f] - y.x[f];
          sq += d * d;
        }
        for (int l : net.outgoing(n)) add(l);
      }
      sum += alpha[n] * sq;
    }
  }
  return sum;
}

double compute_zeta(const Scenario& scenario, const DecisionVector& y_star,
                    std::span<const double> alpha) {
  return phi(scenario, y_star, DecisionVector::zeros(scenario), alpha);
}

double lambda_norm(const Scenario& scenario, const NodeField& lambda) {
  double sq = 0.0;
  for (int f = 0; f < scenario.session_count(); ++f) {
    const int dst = scenario.session(f).dst;
    for (int n = 0; n < scenario.node_count(); ++n) {
      if (n != dst) sq += lambda.at(f, n) * lambda.at(f, n);
    }
  }
  return std::sqrt(sq);
}

std::string serialize_oracle(const Scenario& scenario,
                             const OracleSolution& sol) {
  using detail::format_real;
  const int F = scenario.session_count();
  std::ostringstream out;
  out << "U_star " << format_real(sol.U_star) << "\n";
  out << "duality_gap " << format_real(sol.duality_gap) << "\n";
  out << "max_violation " << format_real(sol.max_violation) << "\n";
  out << "weak_duality_margin " << format_real(sol.weak_duality_margin) << "\n";
  for (int f = 0; f < F; ++f) {
    out << "x " << scenario.session(f).id << " " << format_real(sol.y_star.x[f])
        << "\n";
  }
  for (int l = 0; l < scenario.link_count(); ++l) {
    for (int f = 0; f < F; ++f) {
      const double v = sol.y_star.rate(l, f);
      if (v != 0.0) {
        out << "mu " << l << " " << scenario.session(f).id << " "
            << format_real(v) << "\n";
      }
    }
  }
  for (int f = 0; f < F; ++f) {
    for (int n = 0; n < scenario.node_count(); ++n) {
      if (n == scenario.session(f).dst) continue;
      out << "lambda " << scenario.session(f).id << " " << n << " "
          << format_real(sol.lambda_star.at(f, n)) << "\n";
    }
  }
  return out.str();
}

OracleSolution parse_oracle(const Scenario& scenario, std::string_view text) {
  using detail::parse_int;
  using detail::parse_real;
  OracleSolution sol;
  sol.y_star = DecisionVector::zeros(scenario);
  sol.lambda_star = NodeField::zeros(scenario);
  bool have_u = false;
  auto session_of = [&](std::string_view tok, int line) {
    const int f = scenario.session_index(parse_int(tok, line));
    if (f < 0) throw ValidationError("line " + std::to_string(line) + ": unknown session");
    return f;
  };
  detail::for_each_line(text, [&](int line, const std::vector<std::string_view>& t) {
    const std::string_view key = t[0];
    auto expect = [&](size_t n) {
      if (t.size() != n) {
        throw ParseError(line, "'" + std::string(key) + "' takes " +
                                   std::to_string(n - 1) + " fields");
      }
    };
    if (key == "U_star") {
      expect(2);
      sol.U_star = parse_real(t[1], line);
      have_u = true;
    } else if (key == "duality_gap") {
      expect(2);
      sol.duality_gap = parse_real(t[1], line);
    } else if (key == "max_violation") {
      expect(2);
      sol.max_violation = parse_real(t[1], line);
    } else if (key == "weak_duality_margin") {
      expect(2);
      sol.weak_duality_margin = parse_real(t[1], line);
    } else if (key == "x") {
      expect(3);
      sol.y_star.x[session_of(t[1], line)] = parse_real(t[2], line);
    } else if (key == "mu") {
      expect(4);
      const int l = parse_int(t[1], line);
      if (l < 0 || l >= scenario.link_count()) {
        throw ValidationError("line " + std::to_string(line) + ": unknown link");
      }
      sol.y_star.rate(l, session_of(t[2], line)) = parse_real(t[3], line);
    } else if (key == "lambda") {
      expect(4);
      const int f = session_of(t[1], line);
      const int n = parse_int(t[2], line);
      if (n < 0 || n >= scenario.node_count()) {
        throw ValidationError("line " + std::to_string(line) + ": unknown node");
      }
      sol.lambda_star.at(f, n) = parse_real(t[3], line);
    } else {
      throw ParseError(line, "unknown key '" + std::string(key) + "'");
    }
  });
  if (!have_u) throw ParseError(0, "missing U_star");
  return sol;
}

OracleSolution load_oracle(const Scenario& scenario, const std::string& path) {
  return parse_oracle(scenario, detail::read_file(path, "oracle"));
}

void save_oracle(const Scenario& scenario, const OracleSolution& sol,
                 const std::string& path) {
  detail::write_file(path, serialize_oracle(scenario, sol), "oracle");
}

}  // namespace proxbp
