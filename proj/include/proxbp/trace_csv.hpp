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

#ifndef PROXBP_TRACE_CSV_HPP_
#define PROXBP_TRACE_CSV_HPP_

// Trace CSV: one row per slot x session, scalar columns repeated.
//   slot,alg,session,x,xbar,util_inst,util_avg,util_jensen,gap,maxQ,maxZ,maxY,lyapunov
// Numbers use the shortest round-trip form, NaN is written as "nan".

#include <string>
#include <string_view>
#include <vector>

#include "proxbp/harness.hpp"

namespace proxbp {

inline constexpr std::string_view kTraceCsvHeader =
    "slot,alg,session,x,xbar,util_inst,util_avg,util_jensen,gap,maxQ,maxZ,"
    "maxY,lyapunov";

// `session_ids` labels the session column, in session order.
std::string trace_csv(const std::vector<Trace>& traces,
                      const std::vector<int>& session_ids);
void save_trace_csv(const std::vector<Trace>& traces,
                    const std::vector<int>& session_ids,
                    const std::string& path);

// Rebuilds alg tags and rows (one Trace per alg, in first-seen order).
// Other Trace members stay empty. Throws ParseError on malformed input.
std::vector<Trace> parse_trace_csv(std::string_view text);

// Field-by-field bit equality, NaN equal to NaN.
bool rows_identical(const TraceRow& a, const TraceRow& b);

}  // namespace proxbp

#endif  // PROXBP_TRACE_CSV_HPP_
