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

// proxbp command line: run, oracle, gen appendix-b, compare.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "proxbp/errors.hpp"
#include "proxbp/harness.hpp"
#include "proxbp/network.hpp"
#include "proxbp/oracle.hpp"
#include "proxbp/trace_csv.hpp"

namespace {

using namespace proxbp;

std::vector<int> session_ids(const Scenario& s) {
  std::vector<int> ids;
  for (const Session& ses : s.sessions()) ids.push_back(ses.id);
  return ids;
}

void print_failures(const std::string& tag, const InvariantReport& checks) {
  for (const std::string& f : checks.failures()) {
    std::cerr << tag << ": " << f << "\n";
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proximal backpressure simulator"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "Simulate one algorithm");
  std::string scenario_path, alg = "new", alpha_mode = "bound", oracle_path,
                             out_path;
  long long slots = 10000;
  double alpha_scale = 1.0, V = 500.0;
  bool parallel = false;
  run_cmd->add_option("--scenario", scenario_path)->required();
  run_cmd->add_option("--alg", alg)->check(CLI::IsMember({"new", "dpp"}));
  run_cmd->add_option("--slots", slots)->required()->check(CLI::PositiveNumber);
  run_cmd->add_option("--alpha-mode", alpha_mode)
      ->check(CLI::IsMember({"gap", "bound"}));
  run_cmd->add_option("--alpha-scale", alpha_scale)->check(CLI::PositiveNumber);
  run_cmd->add_option("--V", V)->check(CLI::PositiveNumber);
  run_cmd->add_option("--oracle", oracle_path);
  run_cmd->add_option("--out", out_path)->required();
  run_cmd->add_flag("--parallel", parallel, "Use the OpenMP slot update");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Solve for the optimum");
  double tol = kDefaultOracleTol;
  oracle_cmd->add_option("--scenario", scenario_path)->required();
  oracle_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--out", out_path)->required();

  // gen appendix-b
  auto* gen_cmd = app.add_subcommand("gen", "Generate scenarios");
  gen_cmd->require_subcommand(1);
  auto* gen_b = gen_cmd->add_subcommand("appendix-b", "Adversarial chain");
  int k = 2;
  std::string out_dir;
  gen_b->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  gen_b->add_option("--out-dir", out_dir)->required();

  // compare
  auto* cmp_cmd = app.add_subcommand("compare", "Run several configurations");
  std::string spec_path;
  cmp_cmd->add_option("--scenario", scenario_path)->required();
  cmp_cmd->add_option("--spec", spec_path)->required();
  cmp_cmd->add_option("--oracle", oracle_path);
  cmp_cmd->add_option("--out", out_dir)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      const Scenario scenario = load_scenario(scenario_path);
      std::optional<OracleSolution> oracle;
      if (!oracle_path.empty()) oracle = load_oracle(scenario, oracle_path);
      RunConfig cfg;
      cfg.algorithm = alg == "new" ? Algorithm::kNew : Algorithm::kDpp;
      cfg.alg = AlgConfig::defaults(
          scenario.network(),
          alpha_mode == "gap" ? AlphaMode::kUtilityGap : AlphaMode::kQueueBound,
          alpha_scale);
      cfg.dpp.V = V;
      cfg.parallel = parallel;
      const Trace trace = run(scenario, cfg, slots, oracle ? &*oracle : nullptr);
      save_trace_csv({trace}, session_ids(scenario), out_path);
      print_failures(trace.alg, trace.checks);
      return trace.checks.ok() ? 0 : 1;
    }
    if (*oracle_cmd) {
      const Scenario scenario = load_scenario(scenario_path);
      const OracleSolution sol = solve_centralized(scenario, tol);
      save_oracle(scenario, sol, out_path);
      std::cout << "U_star " << sol.U_star << " duality_gap " << sol.duality_gap
                << "\n";
      return 0;
    }
    if (*gen_b) {
      const AppendixB gen = gen_appendix_b(k);
      const std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      save_scenario(gen.scenario, (dir / "appendix_b.net").string());
      const ScriptedReplay replay =
          replay_scripted(gen.scenario, gen.policy, 4 * k);
      std::string csv = "slot,node0_Z,max_Y\n";
      for (size_t s = 0; s < replay.queues.size(); ++s) {
        double max_y = 0.0;
        for (double v : replay.queues[s].y.values) max_y = std::max(max_y, v);
        csv += std::to_string(s + 1) + "," +
               std::to_string(replay.queues[s].z.at(0, 0)) + "," +
               std::to_string(max_y) + "\n";
      }
      write_text(dir / "appendix_b_replay.csv", csv);
      return 0;
    }
    if (*cmp_cmd) {
      const Scenario scenario = load_scenario(scenario_path);
      std::ifstream in(spec_path);
      if (!in) throw Error("cannot open spec file " + spec_path);
      const std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
      const CompareSpec spec = parse_compare_spec(scenario, text);
      std::optional<OracleSolution> oracle;
      if (!oracle_path.empty()) {
        oracle = load_oracle(scenario, oracle_path);
      } else {
        oracle = solve_centralized(scenario);
      }
      const CompareReport report = compare(scenario, spec, &*oracle);
      const std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      save_trace_csv(report.traces, session_ids(scenario),
                     (dir / "traces.csv").string());
      write_text(dir / "summary.csv", summary_csv(report.summary));
      bool ok = true;
      for (const Trace& t : report.traces) {
        print_failures(t.alg, t.checks);
        ok = ok && t.checks.ok();
      }
      return ok ? 0 : 1;
    }
  } catch (const proxbp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
