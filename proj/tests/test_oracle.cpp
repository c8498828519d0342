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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "proxbp/errors.hpp"
#include "proxbp/oracle.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace proxbp;
using proxbp::testing::Rng;

namespace {

Scenario single_link(double cap) {
  return Scenario(Network(2, {{0, 1, cap}}),
                  {Session{0, 0, 1, Utility::weighted_log(1.0)}});
}

double max_abs_residual(const Scenario& s, const DecisionVector& y) {
  double m = 0.0;
  for (double v : flow_residuals(s, y).values) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

TEST_CASE("single link optimum") {
  const OracleSolution a = solve_centralized(single_link(1.0));
  CHECK(a.y_star.x[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(a.U_star) <= 1e-6);
  CHECK(a.lambda_star.at(0, 0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(a.duality_gap <= 1e-6);
  CHECK(a.duality_gap >= -1e-12);

  const OracleSolution b = solve_centralized(single_link(2.0));
  CHECK(b.y_star.x[0] == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(b.U_star == doctest::Approx(std::log(2.0)).epsilon(1e-6));
  CHECK(b.lambda_star.at(0, 0) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("six-node optimum is certified and agrees with the grid oracle") {
  const Scenario s = load_scenario(PROXBP_SCENARIO_DIR "/sixnode.net");
  const OracleSolution sol = solve_centralized(s);
  CHECK(sol.duality_gap <= 1e-5);
  CHECK(sol.max_violation <= 1e-6);
  CHECK(sol.weak_duality_margin >= -1e-12);
  for (double v : sol.lambda_star.values) CHECK(v >= 0.0);
  const double grid = testing::grid_utility_optimum(s, 0.01);
  CHECK(std::abs(sol.U_star - grid) <= 2e-2);
  CHECK(sol.U_star >= grid - 1e-6);
  // Both sessions cross a capacity-3 cut; log x + 1.5 log y under x + y = 3.
  CHECK(sol.y_star.x[0] == doctest::Approx(1.2).epsilon(1e-5));
  CHECK(sol.y_star.x[1] == doctest::Approx(1.8).epsilon(1e-5));
  CHECK(max_abs_residual(s, sol.y_star) <= 1e-9);
}

TEST_CASE("property: grid agreement and certificate on small random scenarios") {
  Rng rng(61);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int nodes = testing::uniform_int(rng, 2, 5);
    const int extra = testing::uniform_int(rng, 0, 6 - (nodes - 1));
    const Scenario s = testing::random_scenario(
        rng, nodes, extra, testing::uniform_int(rng, 1, 2),
        trial % 2 ? UtilityKind::kWeightedLog1p : UtilityKind::kWeightedLog,
        trial % 3 == 0);
    REQUIRE(s.link_count() <= 6);
    const OracleSolution sol = solve_centralized(s);
    CHECK(sol.duality_gap <= 1e-5);
    CHECK(sol.weak_duality_margin >= -1e-12);
    CHECK(sol.max_violation <= 1e-6);
    // The grid keeps the snapped-down optimum, so it trails U* by at most
    // the utility lost in snapping each rate.
    double resolution = 0.0;
    for (int f = 0; f < s.session_count(); ++f) {
      const Utility& u = s.session(f).utility;
      const double x = sol.y_star.x[f];
      const double snapped = std::floor(x / 0.01 + 1e-9) * 0.01;
      resolution += u.in_domain(snapped) ? u.value(x) - u.value(snapped)
                                         : std::numeric_limits<double>::infinity();
    }
    const double grid = testing::grid_utility_optimum(s, 0.01);
    CHECK(sol.U_star - grid >= -1e-6);
    CHECK(sol.U_star - grid <= std::max(resolution, 0.0) + 1e-6);

    // No point of the capacity set beats q(lambda*) in the Lagrangian.
    const double q = dual_value(s, sol.lambda_star);
    for (int k = 0; k < 200; ++k) {
      const DecisionVector y = testing::random_decisions(rng, s);
      const NodeField g = flow_residuals(s, y);
      double lag = total_utility(s, y.x);
      for (size_t i = 0; i < g.values.size(); ++i) {
        lag -= sol.lambda_star.values[i] * g.values[i];
      }
      CHECK(lag <= q + 1e-9);
    }
    ++checked;
  }
  CHECK(checked == 40);
}

TEST_CASE("unreachable destinations") {
  // Session 1 can only use link 0, which points away from its destination.
  const Scenario s(Network(3, {{0, 1, 1.0}, {1, 2, 1.0}}),
                   {Session{0, 0, 2, Utility::weighted_log(1.0)},
                    Session{1, 2, 0, Utility::weighted_log1p(1.0)}});
  const OracleSolution sol = solve_centralized(s);
  CHECK(sol.y_star.x[1] == 0.0);
  CHECK(sol.duality_gap <= 1e-6);
  CHECK(sol.duality_gap >= -1e-12);

  const Scenario bad(Network(3, {{0, 1, 1.0}, {1, 2, 1.0}}),
                     {Session{0, 2, 0, Utility::weighted_log(1.0)}});
  CHECK_THROWS_AS(solve_centralized(bad), ValidationError);
  CHECK_THROWS_AS(solve_centralized(single_link(1.0), 0.0), ContractError);
}

TEST_CASE("tighten_to_equality examples") {
  const Scenario s(Network(3, {{0, 1, 1.0}, {1, 2, 1.0}}),
                   {Session{0, 0, 2, Utility::weighted_log(1.0)}});
  DecisionVector y = DecisionVector::zeros(s);
  y.x[0] = 0.2;
  y.rate(0, 0) = 0.2;
  y.rate(1, 0) = 0.5;
  // Node 1 receives 0.2 and sends 0.5.
  DecisionVector t = tighten_to_equality(s, y);
  CHECK(t.rate(1, 0) == doctest::Approx(0.2));
  CHECK(t.x == y.x);

  y.rate(0, 0) = 0.0;
  y.x[0] = 0.0;
  y.rate(1, 0) = 0.3;
  t = tighten_to_equality(s, y);
  CHECK(t.rate(1, 0) == 0.0);

  y.x[0] = 0.4;
  y.rate(0, 0) = 0.4;
  y.rate(1, 0) = 0.4;
  CHECK(tighten_to_equality(s, y) == y);
}

TEST_CASE("property: tightening on random feasible line instances") {
  Rng rng(62);
  for (int trial = 0; trial < 300; ++trial) {
    const testing::LineInstance inst = testing::random_line_instance(rng);
    const Scenario& s = inst.scenario;
    const NodeField g0 = flow_residuals(s, inst.y);
    for (double v : g0.values) REQUIRE(v <= 1e-12);
    REQUIRE(set_violation(s, inst.y) <= 0.0);
    const DecisionVector t = tighten_to_equality(s, inst.y);
    CHECK(max_abs_residual(s, t) <= 1e-9);
    CHECK(std::abs(total_utility(s, t.x) - total_utility(s, inst.y.x)) <= 1e-12);
    CHECK(set_violation(s, t) <= kCapacityTolerance);
  }
}

TEST_CASE("zeta") {
  const Scenario s = single_link(1.0);
  DecisionVector y = DecisionVector::zeros(s);
  const std::vector<double> one{1.0, 1.0}, two{2.0, 2.0};
  CHECK(compute_zeta(s, y, one) == 0.0);
  y.x[0] = 1.0;
  y.rate(0, 0) = 1.0;
  // Source: |(1, 1)|^2, destination: 1^2.
  CHECK(compute_zeta(s, y, one) == 3.0);
  CHECK(compute_zeta(s, y, two) == 6.0);
  CHECK(phi(s, y, y, one) == 0.0);
}

TEST_CASE("oracle report round trip") {
  const Scenario s = load_scenario(PROXBP_SCENARIO_DIR "/sixnode.net");
  const OracleSolution sol = solve_centralized(s);
  const OracleSolution back = parse_oracle(s, serialize_oracle(s, sol));
  CHECK(back.U_star == sol.U_star);
  CHECK(back.duality_gap == sol.duality_gap);
  CHECK(back.y_star == sol.y_star);
  CHECK(back.lambda_star == sol.lambda_star);
  CHECK(std::isnan(back.zeta));
  CHECK_THROWS_AS(parse_oracle(s, "x 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_oracle(s, "U_star 1\nfoo 2\n"), ParseError);
  CHECK_THROWS_AS(parse_oracle(s, "U_star 1\nx 42 1\n"), ValidationError);
}
