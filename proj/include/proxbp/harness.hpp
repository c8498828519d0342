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

#ifndef PROXBP_HARNESS_HPP_
#define PROXBP_HARNESS_HPP_

// Simulation driver. Every run steps the algorithm's own queue plus the
// three queue families (Y, Z, signed Q) under the decisions it produces,
// records one TraceRow per slot and checks the per-slot identities inline.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "proxbp/dpp_baseline.hpp"
#include "proxbp/network.hpp"
#include "proxbp/oracle.hpp"
#include "proxbp/prox_backpressure.hpp"
#include "proxbp/queue_models.hpp"

namespace proxbp {

enum class Algorithm { kNew, kDpp };

std::string_view algorithm_name(Algorithm alg);  // "new" / "dpp"

struct RunConfig {
  Algorithm algorithm = Algorithm::kNew;
  AlgConfig alg;   // used by kNew
  DppConfig dpp;   // used by kDpp
  std::string tag; // value of the alg column; algorithm_name() when empty
  bool parallel = false;
};

// Values after slot `slot` (0-based) has been applied. Averages cover the
// slot + 1 slots 0..slot. maxQ is max |Q| of the queue that drives the
// algorithm (signed Q for kNew, clipped Q for kDpp) and lyapunov is half
// its squared norm.
struct TraceRow {
  std::int64_t slot = 0;
  std::vector<double> x;
  std::vector<double> xbar;
  double util_inst = 0.0;
  double util_avg = 0.0;
  double util_jensen = 0.0;
  double gap = 0.0;  // U* - util_avg, NaN without an oracle
  double maxQ = 0.0;
  double maxZ = 0.0;
  double maxY = 0.0;
  double lyapunov = 0.0;
};

// Worst deviations seen by the inline checks.
struct InvariantReport {
  // |L(t+1) - L(t) - sum(Q g + g^2 / 2)|; kNew only.
  double drift_error = 0.0;
  // |W[t] - (2 Q[t] - Q[t-1])| for t >= 1; kNew only.
  double weight_error = 0.0;
  // |Q[t] - sum_{tau < t} g(y[tau])| / max(t, 1), with g recomputed
  // independently of the engine; kNew only.
  double telescoping_error = 0.0;
  // Most negative entry of the clipped queue; kDpp only.
  double min_dpp_queue = 0.0;
  // Actual-queue bound from check_lemma1, checked each slot with B =
  // largest |Q| seen so far.
  std::int64_t lemma1_violations = 0;
  // Largest capacity or sign violation of any decision.
  double max_set_violation = 0.0;

  static constexpr double kDriftTol = 1e-9;
  static constexpr double kWeightTol = 1e-12;
  static constexpr double kTelescopingTol = 1e-9;

  std::vector<std::string> failures() const;
  bool ok() const { return failures().empty(); }
};

struct Trace {
  std::string alg;
  std::vector<TraceRow> rows;
  // sum over (f, n) of Z after each slot; not part of the CSV.
  std::vector<double> total_z;
  // Per (session, node) largest Z seen over the run.
  NodeField peak_z;
  QueueTriple final_queues;
  InvariantReport checks;
};

// Throws ContractError for T < 1 and rethrows sub-solver errors as
// NumericError tagged with the slot index.
Trace run(const Scenario& scenario, const RunConfig& config, std::int64_t T,
          const OracleSolution* oracle = nullptr);

struct AppendixB {
  Scenario scenario;
  ScriptedPolicy policy;
};

// 3k + 1 nodes: destination 0, relays 1..k, a_i = k + i, b_i = 2k + i.
// Links a_1 -> ... -> a_k -> 1 -> ... -> k -> 0 and b_1 -> ... -> b_k -> 0,
// all of capacity 1, one session towards node 0. Slot s (1-based) brings
// one unit to a_s' for s' = ((s - 1) mod 2k) + 1 <= k and to b_(s'-k)
// otherwise; every link is offered one unit per slot and node 0 drains one
// unit per slot.
AppendixB gen_appendix_b(int k);

// rows x cols grid with links both ways between neighbours (capacity 1)
// and `sessions` sessions between distinct random nodes; odd sessions use
// wlog1p. Deterministic in `seed`.
Scenario make_grid_scenario(int rows, int cols, int sessions,
                            std::uint64_t seed);

struct CompareRun {
  RunConfig config;
};

struct CompareSpec {
  std::int64_t slots = 10000;
  std::vector<CompareRun> runs;
};

// Spec text:
//   slots <N>
//   run <tag> <new|dpp> [alpha-mode=gap|bound] [alpha-scale=<s>] [V=<v>]
//       [parallel=0|1]
CompareSpec parse_compare_spec(const Scenario& scenario, std::string_view text);

struct CompareSummary {
  std::string tag;
  std::string alg;
  double terminal_gap = 0.0;
  double terminal_jensen_gap = 0.0;
  double terminal_total_z = 0.0;
  double max_z = 0.0;
  double max_q = 0.0;
  bool invariants_ok = true;
};

struct CompareReport {
  std::vector<Trace> traces;
  std::vector<CompareSummary> summary;
};

CompareReport compare(const Scenario& scenario, const CompareSpec& spec,
                      const OracleSolution* oracle);

std::string summary_csv(const std::vector<CompareSummary>& summary);

}  // namespace proxbp

#endif  // PROXBP_HARNESS_HPP_
