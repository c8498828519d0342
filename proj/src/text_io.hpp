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

#ifndef PROXBP_SRC_TEXT_IO_HPP_
#define PROXBP_SRC_TEXT_IO_HPP_

// Helpers shared by the line-oriented text formats.

#include <string>
#include <string_view>
#include <vector>

namespace proxbp::detail {

std::vector<std::string_view> tokenize(std::string_view line);
// Both throw ParseError(line, ...) unless the whole token parses.
int parse_int(std::string_view tok, int line);
double parse_real(std::string_view tok, int line);
// Shortest text that parses back to exactly v; "nan" for NaN.
std::string format_real(double v);

// Throw Error when the file cannot be opened.
std::string read_file(const std::string& path, std::string_view what);
void write_file(const std::string& path, std::string_view contents,
                std::string_view what);

// Calls fn(line_number, tokens) for every non-empty line with '#' comments
// stripped.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::vector<std::string_view> toks = tokenize(line);
    if (!toks.empty()) fn(line_no, toks);
    pos = end + 1;
  }
}

}  // namespace proxbp::detail

#endif  // PROXBP_SRC_TEXT_IO_HPP_
