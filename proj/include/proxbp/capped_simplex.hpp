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

#ifndef PROXBP_CAPPED_SIMPLEX_HPP_
#define PROXBP_CAPPED_SIMPLEX_HPP_

// Euclidean projection onto the capped simplex
//
//   min 1/2 sum_k (z_k - a_k)^2   s.t.  sum_k z_k <= b,  z >= 0,
//
// whose solution is z_k = max{0, a_k - theta} for a water level theta >= 0
// with theta * (sum z - b) = 0.

#include <span>
#include <vector>

namespace proxbp {

struct Projection {
  std::vector<double> z;
  double theta = 0.0;
};

inline constexpr double kDefaultBisectTol = 1e-10;
inline constexpr int kBisectIterationCap = 200;

// Sort-and-scan solver, O(K log K). Equal entries keep their original
// order; the result depends on values only. Requires K >= 1, b >= 0
// (ContractError otherwise).
Projection project_sorted(std::span<const double> a, double b);

// Same problem by bisection on theta over [0, max a]. Stops once
// |sum max(0, a - theta) - b| <= tol. Throws ContractError when tol <= 0 and
// NumericError if the cap of 200 halvings is hit.
Projection project_bisect(std::span<const double> a, double b,
                          double tol = kDefaultBisectTol);

// Largest violation of the KKT system with nu eliminated
// (nu_k = z_k - a_k + theta):
//   nu_k >= 0, z_k >= 0, nu_k z_k = 0, sum z <= b, theta >= 0,
//   theta (sum z - b) = 0.
// Zero exactly at the optimum.
double kkt_residual(std::span<const double> a, double b,
                    std::span<const double> z, double theta);

}  // namespace proxbp

#endif  // PROXBP_CAPPED_SIMPLEX_HPP_
