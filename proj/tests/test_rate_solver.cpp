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

#include <algorithm>
#include <cmath>

#include "proxbp/errors.hpp"
#include "proxbp/rate_solver.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace proxbp;
using proxbp::testing::Rng;

namespace {

RateProblem wlog(double w, double alpha, double W, double x_prev) {
  return {Utility::weighted_log(w), W, x_prev, alpha};
}

RateProblem wlog1p(double w, double alpha, double W, double x_prev) {
  return {Utility::weighted_log1p(w), W, x_prev, alpha};
}

testing::GridMax grid(const RateProblem& p, double hi, double step = 1e-4) {
  const double lo = p.utility.open_domain() ? step : 0.0;
  return testing::grid_max([&](double x) { return rate_objective(p, x); }, lo,
                           hi, step);
}

}  // namespace

TEST_CASE("grid oracle reproduces the frozen maximizers") {
  CHECK(grid(wlog(1, 0.5, 0, 0), 3).arg == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(grid(wlog(1, 1, 1, 1), 3).arg == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(grid(wlog1p(1, 1, 2, 0), 3).arg == 0.0);
  CHECK(grid(wlog(1, 1, 0, 0), 3).arg ==
        doctest::Approx(0.70711).epsilon(1e-3));
  CHECK(grid(wlog(2, 1, 0, 0), 3).arg == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("solve_rate examples") {
  CHECK(solve_rate(wlog(1, 0.5, 0, 0)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(solve_rate(wlog(1, 1, 1, 1)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(solve_rate(wlog1p(1, 1, 2, 0)) == 0.0);
  // h(0) = 1 - 0.5 > 0 for W = 0.5: interior root of 1/(1+x) - 2x - 0.5.
  const double x = solve_rate(wlog1p(1, 1, 0.5, 0));
  CHECK(std::abs(rate_stationarity(wlog1p(1, 1, 0.5, 0), x)) <= 1e-9);
  CHECK_THROWS_AS(solve_rate(wlog(1, 1, 0, 0), 0.0), ContractError);
  CHECK_THROWS_AS(solve_rate(wlog(1, 1, 0, 0), -1e-3), ContractError);
  CHECK_THROWS_AS(solve_rate(wlog(1, 0.0, 0, 0)), ContractError);
}

TEST_CASE("closed_form_wlog examples") {
  const double r = closed_form_wlog(wlog(1, 1, 0, 0));
  CHECK(r == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(rate_stationarity(wlog(1, 1, 0, 0), r)) <= 1e-9);
  CHECK(closed_form_wlog(wlog(1, 1, 1, 1)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(closed_form_wlog(wlog(2, 1, 0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(closed_form_wlog(wlog1p(1, 1, 0, 0)), ContractError);
}

TEST_CASE("property: closed form is a root and matches bisection and the grid") {
  Rng rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const RateProblem p =
        wlog(testing::uniform(rng, 0.1, 5), testing::uniform(rng, 0.5, 10),
             testing::uniform(rng, -10, 10), testing::uniform(rng, 0, 5));
    const double xc = closed_form_wlog(p);
    CHECK(xc > 0.0);
    CHECK(std::abs(rate_stationarity(p, xc)) <= 1e-9);
    CHECK(std::abs(xc - solve_rate(p)) <= 1e-8);
    const double x_hi = 2.0 * xc + 1.0;
    // Rounding allowance on O(10) objective values.
    CHECK(rate_objective(p, xc) >= grid(p, x_hi).value - 1e-12);
  }
}

TEST_CASE("property: weighted-log1p bisection beats the grid") {
  Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const RateProblem p =
        wlog1p(testing::uniform(rng, 0.1, 5), testing::uniform(rng, 0.5, 10),
               testing::uniform(rng, -10, 10), testing::uniform(rng, 0, 5));
    const double x = solve_rate(p);
    CHECK(x >= 0.0);
    if (x > 0.0) CHECK(std::abs(rate_stationarity(p, x)) <= 1e-8);
    if (x == 0.0) CHECK(rate_stationarity(p, 0.0) <= 0.0);
    CHECK(rate_objective(p, x) >= grid(p, 2.0 * x + 1.0).value - 1e-12);
  }
}

TEST_CASE("property: strong concavity gap") {
  Rng rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const RateProblem p =
        trial % 2 ? wlog(testing::uniform(rng, 0.1, 5), testing::uniform(rng, 0.5, 10),
                         testing::uniform(rng, -10, 10), testing::uniform(rng, 0, 5))
                  : wlog1p(testing::uniform(rng, 0.1, 5), testing::uniform(rng, 0.5, 10),
                           testing::uniform(rng, -10, 10), testing::uniform(rng, 0, 5));
    const double xh = trial % 2 ? closed_form_wlog(p) : solve_rate(p);
    const double x = testing::uniform(rng, 1e-3, 10.0);
    CHECK(rate_objective(p, xh) >=
          rate_objective(p, x) + p.alpha * (xh - x) * (xh - x) - 1e-9);
  }
}

TEST_CASE("property: rate is nonincreasing in W") {
  Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    RateProblem p =
        wlog(testing::uniform(rng, 0.1, 5), testing::uniform(rng, 0.5, 10), -10,
             testing::uniform(rng, 0, 5));
    RateProblem q = p;
    q.utility = Utility::weighted_log1p(p.utility.weight());
    double prev_c = closed_form_wlog(p), prev_b = solve_rate(q);
    for (double W = -10.0; W <= 10.0; W += 0.25) {
      p.weight = q.weight = W;
      const double c = closed_form_wlog(p), b = solve_rate(q);
      CHECK(c <= prev_c);
      CHECK(b <= prev_b + 1e-10);
      prev_c = c;
      prev_b = b;
    }
  }
}
