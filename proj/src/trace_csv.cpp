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

#include "proxbp/trace_csv.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>

#include "proxbp/errors.hpp"
#include "text_io.hpp"

namespace proxbp {

std::string trace_csv(const std::vector<Trace>& traces,
                      const std::vector<int>& session_ids) {
  using detail::format_real;
  std::ostringstream out;
  out << kTraceCsvHeader << "\n";
  for (const Trace& trace : traces) {
    for (const TraceRow& row : trace.rows) {
      if (row.x.size() != session_ids.size()) {
        throw ContractError("session id list does not match the trace");
      }
      const std::string tail =
          format_real(row.util_inst) + "," + format_real(row.util_avg) + "," +
          format_real(row.util_jensen) + "," + format_real(row.gap) + "," +
          format_real(row.maxQ) + "," + format_real(row.maxZ) + "," +
          format_real(row.maxY) + "," + format_real(row.lyapunov);
      for (size_t f = 0; f < row.x.size(); ++f) {
        out << row.slot << "," << trace.alg << "," << session_ids[f] << ","
            << format_real(row.x[f]) << "," << format_real(row.xbar[f]) << ","
            << tail << "\n";
      }
    }
  }
  return out.str();
}

void save_trace_csv(const std::vector<Trace>& traces,
                    const std::vector<int>& session_ids,
                    const std::string& path) {
  detail::write_file(path, trace_csv(traces, session_ids), "trace");
}

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  size_t pos = 0;
  for (;;) {
    const size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
}

double field_real(std::string_view tok, int line) {
  if (tok == "nan") return std::numeric_limits<double>::quiet_NaN();
  return detail::parse_real(tok, line);
}

}  // namespace

std::vector<Trace> parse_trace_csv(std::string_view text) {
  std::vector<Trace> traces;
  std::map<std::string, size_t, std::less<>> index;
  int line_no = 0;
  size_t pos = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kTraceCsvHeader) throw ParseError(line_no, "unexpected CSV header");
      header_seen = true;
      continue;
    }
    const std::vector<std::string_view> cols = split_commas(line);
    if (cols.size() != 13) throw ParseError(line_no, "expected 13 columns");
    const std::string_view alg = cols[1];
    auto it = index.find(alg);
    if (it == index.end()) {
      it = index.emplace(std::string(alg), traces.size()).first;
      traces.emplace_back().alg = std::string(alg);
    }
    Trace& trace = traces[it->second];
    const double slot_value = detail::parse_real(cols[0], line_no);
    const auto slot = static_cast<std::int64_t>(slot_value);
    if (static_cast<double>(slot) != slot_value) {
      throw ParseError(line_no, "slot must be an integer");
    }
    if (trace.rows.empty() || trace.rows.back().slot != slot) {
      if (!trace.rows.empty() && trace.rows.back().slot >= slot) {
        throw ParseError(line_no, "slots must increase");
      }
      TraceRow row;
      row.slot = slot;
      row.util_inst = field_real(cols[5], line_no);
      row.util_avg = field_real(cols[6], line_no);
      row.util_jensen = field_real(cols[7], line_no);
      row.gap = field_real(cols[8], line_no);
      row.maxQ = field_real(cols[9], line_no);
      row.maxZ = field_real(cols[10], line_no);
      row.maxY = field_real(cols[11], line_no);
      row.lyapunov = field_real(cols[12], line_no);
      trace.rows.push_back(std::move(row));
    }
    TraceRow& row = trace.rows.back();
    row.x.push_back(field_real(cols[3], line_no));
    row.xbar.push_back(field_real(cols[4], line_no));
  }
  if (!header_seen) throw ParseError(0, "empty trace CSV");
  return traces;
}

bool rows_identical(const TraceRow& a, const TraceRow& b) {
  auto same = [](double u, double v) {
    return std::bit_cast<std::uint64_t>(u) == std::bit_cast<std::uint64_t>(v) ||
           (std::isnan(u) && std::isnan(v));
  };
  auto same_vec = [&](const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() != v.size()) return false;
    for (size_t i = 0; i < u.size(); ++i) {
      if (!same(u[i], v[i])) return false;
    }
    return true;
  };
  return a.slot == b.slot && same_vec(a.x, b.x) && same_vec(a.xbar, b.xbar) &&
         same(a.util_inst, b.util_inst) && same(a.util_avg, b.util_avg) &&
         same(a.util_jensen, b.util_jensen) && same(a.gap, b.gap) &&
         same(a.maxQ, b.maxQ) && same(a.maxZ, b.maxZ) && same(a.maxY, b.maxY) &&
         same(a.lyapunov, b.lyapunov);
}

}  // namespace proxbp
