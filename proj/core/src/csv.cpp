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

#include "sarckit/csv.hpp"

#include <fstream>
#include <sstream>

#include "sarckit/types.hpp"

namespace sarckit::csv {

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  std::size_t line = 1;

  bool eof() const { return pos >= s.size(); }

  // Parses one record (row). Returns false at end of input.
  bool next_row(std::vector<std::string>& out, std::size_t& start_line) {
    // Skip a trailing newline-only tail.
    if (eof()) return false;
    start_line = line;
    out.clear();
    std::string field;
    bool quoted = false;
    bool in_field_quotes = false;
    for (;;) {
      if (eof()) {
        if (in_field_quotes)
          throw ParseError("csv: unterminated quoted field starting near line " +
                           std::to_string(start_line));
        out.push_back(field);
        return true;
      }
      char c = s[pos];
      if (in_field_quotes) {
        if (c == '"') {
          if (pos + 1 < s.size() && s[pos + 1] == '"') {
            field += '"';
            pos += 2;
          } else {
            in_field_quotes = false;
            ++pos;
          }
        } else {
          if (c == '\n') ++line;
          field += c;
          ++pos;
        }
        continue;
      }
      switch (c) {
        case '"':
          if (!field.empty() && !quoted)
            throw ParseError("csv: stray quote in unquoted field at line " +
                             std::to_string(line));
          quoted = true;
          in_field_quotes = true;
          ++pos;
          break;
        case ',':
          out.push_back(field);
          field.clear();
          quoted = false;
          ++pos;
          break;
        case '\r':
          ++pos;
          break;
        case '\n':
          out.push_back(field);
          ++pos;
          ++line;
          return true;
        default:
          field += c;
          ++pos;
      }
    }
  }
};

}  // namespace

Table parse_string(const std::string& content) {
  Table t;
  Parser p{content};
  std::vector<std::string> row;
  std::size_t start_line = 1;
  if (!p.next_row(row, start_line))
    throw ParseError("csv: empty input, header row required");
  t.header = row;
  while (p.next_row(row, start_line)) {
    // A lone trailing newline yields one empty field; skip it.
    if (row.size() == 1 && row[0].empty()) continue;
    if (row.size() != t.header.size())
      throw ParseError("csv: row at line " + std::to_string(start_line) +
                       " has " + std::to_string(row.size()) +
                       " fields, header has " + std::to_string(t.header.size()));
    t.rows.push_back(row);
    t.row_lines.push_back(start_line);
  }
  return t;
}

Table parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("csv: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str());
}

std::string escape_field(const std::string& field) {
  bool needs = field.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

}  // namespace sarckit::csv
