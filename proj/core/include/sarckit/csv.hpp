//
// Copyright 2026 The sarckit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef SARCKIT_CSV_HPP
#define SARCKIT_CSV_HPP

#include <string>
#include <vector>

namespace sarckit::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // 1-based line number where each data row starts (for error reporting).
  std::vector<std::size_t> row_lines;
};

// RFC 4180: comma-separated, UTF-8, double-quoted fields may contain commas,
// quotes ("" escape) and newlines. Header row required.
// Throws ParseError with a line number on malformed input.
Table parse_file(const std::string& path);
Table parse_string(const std::string& content);

std::string escape_field(const std::string& field);

}  // namespace sarckit::csv

#endif  // SARCKIT_CSV_HPP
