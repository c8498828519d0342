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
#include <vector>

#include "proxbp/capped_simplex.hpp"
#include "proxbp/errors.hpp"
#include "support/generators.hpp"
#include "support/projection_oracle.hpp"

using namespace proxbp;
using proxbp::testing::Rng;

namespace {

double sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

TEST_CASE("grid oracle reproduces the frozen water levels") {
  // The frozen values below come from this search.
  CHECK(testing::grid_theta(std::vector<double>{1.0, 0.5}, 1.0, 1e-4) ==
        doctest::Approx(0.25).epsilon(1e-3));
  CHECK(testing::grid_theta(std::vector<double>{-0.5, 2.0}, 1.0, 1e-4) ==
        doctest::Approx(1.0).epsilon(1e-3));
  CHECK(testing::grid_theta(std::vector<double>{3, 3, 3}, 3.0, 1e-4) ==
        doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("project_sorted examples") {
  SUBCASE("slack cap") {
    const Projection p = project_sorted(std::vector<double>{0.2, 0.3}, 1.0);
    CHECK(p.theta == 0.0);
    CHECK(p.z == std::vector<double>{0.2, 0.3});
  }
  SUBCASE("active cap") {
    const std::vector<double> a{1.0, 0.5};
    const Projection p = project_sorted(a, 1.0);
    CHECK(p.theta == doctest::Approx(0.25));
    CHECK(p.z[0] == doctest::Approx(0.75));
    CHECK(p.z[1] == doctest::Approx(0.25));
    CHECK(kkt_residual(a, 1.0, p.z, p.theta) <= 1e-9);
  }
  SUBCASE("negative entry pinned at zero") {
    const std::vector<double> a{-0.5, 2.0};
    const Projection p = project_sorted(a, 1.0);
    CHECK(p.theta == doctest::Approx(1.0));
    CHECK(p.z[0] == 0.0);
    CHECK(p.z[1] == doctest::Approx(1.0));
    CHECK(kkt_residual(a, 1.0, p.z, p.theta) <= 1e-9);
  }
  SUBCASE("zero budget") {
    const std::vector<double> a{0.4, 0.9, -1.0};
    const Projection p = project_sorted(a, 0.0);
    CHECK(sum(p.z) == 0.0);
    CHECK(kkt_residual(a, 0.0, p.z, p.theta) <= 1e-12);
  }
  SUBCASE("ties") {
    const std::vector<double> a{2.0, 2.0, 1.0};
    const Projection p = project_sorted(a, 1.0);
    CHECK(p.z[0] == p.z[1]);
    CHECK(sum(p.z) == doctest::Approx(1.0));
    CHECK(kkt_residual(a, 1.0, p.z, p.theta) <= 1e-12);
  }
  CHECK_THROWS_AS(project_sorted(std::vector<double>{}, 1.0), ContractError);
  CHECK_THROWS_AS(project_sorted(std::vector<double>{1.0}, -1.0), ContractError);
}

TEST_CASE("project_bisect examples") {
  const Projection p = project_bisect(std::vector<double>{1.0, 0.5}, 1.0, 1e-10);
  CHECK(std::abs(p.theta - 0.25) <= 1e-9);
  const Projection q = project_bisect(std::vector<double>{3, 3, 3}, 3.0);
  CHECK(q.theta == doctest::Approx(2.0));
  for (double z : q.z) CHECK(z == doctest::Approx(1.0));
  CHECK(sum(q.z) == doctest::Approx(3.0));
  const Projection r = project_bisect(std::vector<double>{0.1}, 5.0);
  CHECK(r.theta == 0.0);
  CHECK(r.z == std::vector<double>{0.1});
  CHECK_THROWS_AS(project_bisect(std::vector<double>{1.0}, 0.5, 0.0), ContractError);
  CHECK_THROWS_AS(project_bisect(std::vector<double>{1.0}, 0.5, -1.0), ContractError);
}

TEST_CASE("kkt_residual detects non-optimal pairs") {
  const std::vector<double> a{1.0, 0.5};
  const Projection p = project_sorted(a, 1.0);
  CHECK(kkt_residual(a, 1.0, p.z, p.theta) <= 1e-9);
  std::vector<double> z = p.z;
  z[0] += 0.1;
  // nu_0 = z_0 - a_0 + theta = 0.1 and sum z exceeds b by 0.1.
  CHECK(kkt_residual(a, 1.0, z, p.theta) >= 0.05);
  const std::vector<double> over{0.8, 0.6};
  CHECK(kkt_residual(a, 1.0, over, 0.0) >= sum(over) - 1.0);
}

TEST_CASE("property: sorted and bisection agree; KKT holds; slack branch") {
  Rng rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const int K = testing::uniform_int(rng, 1, 16);
    const std::vector<double> a = testing::uniform_vector(rng, K, -5.0, 5.0);
    const double b = testing::uniform(rng, 0.0, 5.0);
    const Projection s = project_sorted(a, b);
    const Projection bi = project_bisect(a, b);
    CHECK(kkt_residual(a, b, s.z, s.theta) <= 1e-9);
    CHECK(s.theta >= 0.0);
    CHECK(sum(s.z) <= b + 1e-9);
    for (int k = 0; k < K; ++k) {
      CHECK(std::abs(s.z[k] - bi.z[k]) <= 1e-8);
      CHECK(s.z[k] == std::max(0.0, a[k] - s.theta));
    }
    double pos = 0.0;
    for (double v : a) pos += std::max(0.0, v);
    if (pos <= b) CHECK(s.theta == 0.0);
  }
}

TEST_CASE("property: no grid point of the feasible set is closer") {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int K = testing::uniform_int(rng, 1, 6);
    const std::vector<double> a = testing::uniform_vector(rng, K, -5.0, 5.0);
    const double b = testing::uniform(rng, 0.0, 5.0);
    const Projection p = project_sorted(a, b);
    double d = 0.0;
    for (int k = 0; k < K; ++k) d += (p.z[k] - a[k]) * (p.z[k] - a[k]);
    CHECK(testing::grid_nearest_sq(a, b, 1e-2) >= d - 1e-12);
  }
}

TEST_CASE("property: nonexpansive") {
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int K = testing::uniform_int(rng, 1, 10);
    const std::vector<double> a = testing::uniform_vector(rng, K, -5.0, 5.0);
    const std::vector<double> a2 = testing::uniform_vector(rng, K, -5.0, 5.0);
    const double b = testing::uniform(rng, 0.0, 5.0);
    const Projection p = project_sorted(a, b), q = project_sorted(a2, b);
    double dz = 0.0, da = 0.0;
    for (int k = 0; k < K; ++k) {
      dz += (p.z[k] - q.z[k]) * (p.z[k] - q.z[k]);
      da += (a[k] - a2[k]) * (a[k] - a2[k]);
    }
    CHECK(std::sqrt(dz) <= std::sqrt(da) + 1e-12);
  }
}
