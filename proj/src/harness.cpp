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

#include "proxbp/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "proxbp/errors.hpp"
#include "text_io.hpp"

namespace proxbp {

std::string_view algorithm_name(Algorithm alg) {
  return alg == Algorithm::kNew ? "new" : "dpp";
}

std::vector<std::string> InvariantReport::failures() const {
  std::vector<std::string> out;
  auto num = [](double v) {
    std::ostringstream s;
    s << v;
    return s.str();
  };
  if (!(drift_error <= kDriftTol)) out.push_back("drift identity off by " + num(drift_error));
  if (!(weight_error <= kWeightTol)) out.push_back("weight identity off by " + num(weight_error));
  if (!(telescoping_error <= kTelescopingTol)) {
    out.push_back("queue telescoping off by " + num(telescoping_error) + " per slot");
  }
  if (min_dpp_queue < 0.0) out.push_back("negative clipped queue " + num(min_dpp_queue));
  if (lemma1_violations > 0) {
    out.push_back(std::to_string(lemma1_violations) + " queue-bound transfer violations");
  }
  if (!(max_set_violation <= kCapacityTolerance)) {
    out.push_back("decision outside the feasible set by " + num(max_set_violation));
  }
  return out;
}

namespace {

double max_abs(const NodeField& field) {
  double m = 0.0;
  for (double v : field.values) m = std::max(m, std::abs(v));
  return m;
}

double drift_term(const NodeField& q, const NodeField& g) {
  double sum = 0.0;
  for (size_t i = 0; i < q.values.size(); ++i) {
    sum += q.values[i] * g.values[i] + 0.5 * g.values[i] * g.values[i];
  }
  return sum;
}

}  // namespace

Trace run(const Scenario& scenario, const RunConfig& config, std::int64_t T,
          const OracleSolution* oracle) {
  if (T < 1) throw ContractError("run needs at least one slot");
  const bool is_new = config.algorithm == Algorithm::kNew;
  if (is_new) {
    config.alg.validate(scenario.network());
  } else {
    config.dpp.validate(scenario);
  }
  const int F = scenario.session_count();

  Trace trace;
  trace.alg = config.tag.empty() ? std::string(algorithm_name(config.algorithm))
                                 : config.tag;
  trace.rows.reserve(static_cast<size_t>(T));
  trace.total_z.reserve(static_cast<size_t>(T));
  InvariantReport& checks = trace.checks;

  BpState state = BpState::initial(scenario);
  NodeField q_before = state.q;  // Q[t-1]
  NodeField dpp_q = NodeField::zeros(scenario);
  NodeField telescoped = NodeField::zeros(scenario);
  QueueTriple queues = QueueTriple::zeros(scenario);
  trace.peak_z = NodeField::zeros(scenario);
  std::vector<double> x_sum(F, 0.0);
  double util_sum = 0.0;
  double B = 0.0;
  const double u_star =
      oracle ? oracle->U_star : std::numeric_limits<double>::quiet_NaN();

  for (std::int64_t t = 0; t < T; ++t) {
    DecisionVector y;
    double drive_max = 0.0;
    double drive_lyapunov = 0.0;
    try {
      if (is_new) {
        SlotResult r = config.parallel
                           ? slot_update_parallel(state, scenario, config.alg)
                           : slot_update(state, scenario, config.alg);
        const NodeField g = flow_residuals(scenario, r.y);
        if (t >= 1) {
          for (size_t i = 0; i < r.w.values.size(); ++i) {
            const double expect = 2.0 * state.q.values[i] - q_before.values[i];
            checks.weight_error =
                std::max(checks.weight_error, std::abs(r.w.values[i] - expect));
          }
        }
        const double drift = lyapunov(r.next.q) - lyapunov(state.q);
        checks.drift_error = std::max(
            checks.drift_error, std::abs(drift - drift_term(state.q, g)));
        for (size_t i = 0; i < g.values.size(); ++i) {
          telescoped.values[i] += g.values[i];
          checks.telescoping_error = std::max(
              checks.telescoping_error,
              std::abs(telescoped.values[i] - r.next.q.values[i]) /
                  static_cast<double>(t + 1));
        }
        q_before = std::move(state.q);
        state = std::move(r.next);
        y = std::move(r.y);
        drive_max = max_abs(state.q);
        drive_lyapunov = lyapunov(state.q);
      } else {
        y = config.parallel
                ? dpp_slot_update_parallel(dpp_q, scenario, config.dpp)
                : dpp_slot_update(dpp_q, scenario, config.dpp);
        dpp_q = step_Y(dpp_q, y, scenario);
        for (double v : dpp_q.values) {
          checks.min_dpp_queue = std::min(checks.min_dpp_queue, v);
        }
        drive_max = max_abs(dpp_q);
        drive_lyapunov = lyapunov(dpp_q);
      }
      checks.max_set_violation =
          std::max(checks.max_set_violation, set_violation(scenario, y));

      queues.y = step_Y(queues.y, y, scenario);
      queues.z = step_Z(queues.z, y, scenario).z;
      for (size_t i = 0; i < queues.z.values.size(); ++i) {
        trace.peak_z.values[i] = std::max(trace.peak_z.values[i], queues.z.values[i]);
      }
      queues.q = step_Q(queues.q, y, scenario);
      B = std::max(B, max_abs(queues.q));
      const QueueTriple* one = &queues;
      checks.lemma1_violations += static_cast<std::int64_t>(
          check_lemma1(std::span<const QueueTriple>(one, 1), B, scenario)
              .violations.size());

      TraceRow row;
      row.slot = t;
      row.x = y.x;
      row.xbar.resize(F);
      const double count = static_cast<double>(t + 1);
      for (int f = 0; f < F; ++f) {
        x_sum[f] += y.x[f];
        row.xbar[f] = x_sum[f] / count;
      }
      row.util_inst = total_utility(scenario, y.x);
      util_sum += row.util_inst;
      row.util_avg = util_sum / count;
      row.util_jensen = total_utility(scenario, row.xbar);
      row.gap = u_star - row.util_avg;
      row.maxQ = drive_max;
      row.maxZ = max_abs(queues.z);
      row.maxY = max_abs(queues.y);
      row.lyapunov = drive_lyapunov;
      trace.rows.push_back(std::move(row));

      double total = 0.0;
      for (double v : queues.z.values) total += v;
      trace.total_z.push_back(total);
    } catch (const NumericError& e) {
      throw NumericError("slot " + std::to_string(t) + ": " + e.what());
    } catch (const DomainError& e) {
      throw NumericError("slot " + std::to_string(t) + ": " + e.what());
    }
  }
  trace.final_queues = std::move(queues);
  return trace;
}

AppendixB gen_appendix_b(int k) {
  if (k < 1) throw ContractError("appendix-b chain needs k >= 1");
  const int N = 3 * k + 1;
  auto a = [k](int i) { return k + i; };
  auto b = [k](int i) { return 2 * k + i; };
  std::vector<Link> links;
  for (int i = 1; i < k; ++i) links.push_back({a(i), a(i + 1), 1.0});
  links.push_back({a(k), 1, 1.0});
  for (int i = 1; i < k; ++i) links.push_back({i, i + 1, 1.0});
  links.push_back({k, 0, 1.0});
  for (int i = 1; i < k; ++i) links.push_back({b(i), b(i + 1), 1.0});
  links.push_back({b(k), 0, 1.0});

  AppendixB out{Scenario(Network(N, links),
                         {Session{0, a(1), 0, Utility::weighted_log(1.0)}}),
                {}};
  ScriptedPolicy& p = out.policy;
  p.period = 2 * k;
  for (int s = 1; s <= 2 * k; ++s) {
    NodeField arrivals = NodeField::zeros(out.scenario);
    arrivals.at(0, s <= k ? a(s) : b(s - k)) = 1.0;
    p.arrivals.push_back(std::move(arrivals));
    p.mu.push_back(std::vector<double>(links.size(), 1.0));
  }
  p.destination_drain.assign(N, 0.0);
  p.destination_drain[0] = 1.0;
  return out;
}

Scenario make_grid_scenario(int rows, int cols, int sessions,
                            std::uint64_t seed) {
  if (rows < 1 || cols < 1 || rows * cols < 2 || sessions < 1) {
    throw ContractError("grid needs at least two nodes and one session");
  }
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<Link> links;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) {
        links.push_back({id(r, c), id(r, c + 1), 1.0});
        links.push_back({id(r, c + 1), id(r, c), 1.0});
      }
      if (r + 1 < rows) {
        links.push_back({id(r, c), id(r + 1, c), 1.0});
        links.push_back({id(r + 1, c), id(r, c), 1.0});
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> node(0, rows * cols - 1);
  std::vector<Session> list;
  for (int f = 0; f < sessions; ++f) {
    const int src = node(rng);
    int dst = node(rng);
    while (dst == src) dst = node(rng);
    list.push_back({f, src, dst,
                    f % 2 ? Utility::weighted_log1p(1.0)
                          : Utility::weighted_log(1.0)});
  }
  return Scenario(Network(rows * cols, std::move(links)), std::move(list));
}

CompareSpec parse_compare_spec(const Scenario& scenario, std::string_view text) {
  CompareSpec spec;
  detail::for_each_line(text, [&](int line, const std::vector<std::string_view>& t) {
    if (t[0] == "slots") {
      if (t.size() != 2) throw ParseError(line, "'slots' takes one field");
      const double v = detail::parse_real(t[1], line);
      if (!(v >= 1.0) || v != std::floor(v)) {
        throw ParseError(line, "slots must be a positive integer");
      }
      spec.slots = static_cast<std::int64_t>(v);
      return;
    }
    if (t[0] != "run") throw ParseError(line, "unknown keyword '" + std::string(t[0]) + "'");
    if (t.size() < 3) throw ParseError(line, "'run' needs a tag and an algorithm");
    CompareRun run;
    RunConfig& cfg = run.config;
    cfg.tag = std::string(t[1]);
    if (t[2] == "new") {
      cfg.algorithm = Algorithm::kNew;
    } else if (t[2] == "dpp") {
      cfg.algorithm = Algorithm::kDpp;
    } else {
      throw ParseError(line, "algorithm must be new or dpp");
    }
    AlphaMode mode = AlphaMode::kQueueBound;
    double scale = 1.0;
    for (size_t i = 3; i < t.size(); ++i) {
      const size_t eq = t[i].find('=');
      if (eq == std::string_view::npos) throw ParseError(line, "expected key=value");
      const std::string_view key = t[i].substr(0, eq);
      const std::string_view val = t[i].substr(eq + 1);
      if (key == "alpha-mode") {
        if (val == "gap") {
          mode = AlphaMode::kUtilityGap;
        } else if (val == "bound") {
          mode = AlphaMode::kQueueBound;
        } else {
          throw ParseError(line, "alpha-mode must be gap or bound");
        }
      } else if (key == "alpha-scale") {
        scale = detail::parse_real(val, line);
      } else if (key == "V") {
        cfg.dpp.V = detail::parse_real(val, line);
      } else if (key == "parallel") {
        cfg.parallel = detail::parse_int(val, line) != 0;
      } else {
        throw ParseError(line, "unknown run option '" + std::string(key) + "'");
      }
    }
    if (!(scale > 0.0)) throw ParseError(line, "alpha-scale must be positive");
    cfg.alg = AlgConfig::defaults(scenario.network(), mode, scale);
    spec.runs.push_back(std::move(run));
  });
  return spec;
}

CompareReport compare(const Scenario& scenario, const CompareSpec& spec,
                      const OracleSolution* oracle) {
  CompareReport report;
  for (const CompareRun& r : spec.runs) {
    Trace trace = run(scenario, r.config, spec.slots, oracle);
    const TraceRow& last = trace.rows.back();
    CompareSummary s;
    s.tag = trace.alg;
    s.alg = std::string(algorithm_name(r.config.algorithm));
    s.terminal_gap = last.gap;
    s.terminal_jensen_gap =
        oracle ? oracle->U_star - last.util_jensen
               : std::numeric_limits<double>::quiet_NaN();
    s.terminal_total_z = trace.total_z.back();
    for (const TraceRow& row : trace.rows) {
      s.max_z = std::max(s.max_z, row.maxZ);
      s.max_q = std::max(s.max_q, row.maxQ);
    }
    s.invariants_ok = trace.checks.ok();
    report.summary.push_back(std::move(s));
    report.traces.push_back(std::move(trace));
  }
  return report;
}

std::string summary_csv(const std::vector<CompareSummary>& summary) {
  using detail::format_real;
  std::ostringstream out;
  out << "tag,alg,terminal_gap,terminal_jensen_gap,terminal_total_z,max_z,"
         "max_q,invariants_ok\n";
  for (const CompareSummary& s : summary) {
    out << s.tag << "," << s.alg << "," << format_real(s.terminal_gap) << ","
        << format_real(s.terminal_jensen_gap) << ","
        << format_real(s.terminal_total_z) << "," << format_real(s.max_z)
        << "," << format_real(s.max_q) << "," << (s.invariants_ok ? 1 : 0)
        << "\n";
  }
  return out.str();
}

}  // namespace proxbp
