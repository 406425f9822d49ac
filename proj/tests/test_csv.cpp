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

#include <string>

#include <doctest.h>

#include "sarckit/csv.hpp"
#include "sarckit/types.hpp"

namespace csv = sarckit::csv;

TEST_CASE("plain rows split on commas") {
  auto t = csv::parse_string("a,b,c\n1,2,3\n4,5,6\n");
  CHECK(t.header == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0] == std::vector<std::string>{"1", "2", "3"});
  CHECK(t.rows[1] == std::vector<std::string>{"4", "5", "6"});
}

TEST_CASE("quoted fields keep commas and escaped quotes") {
  auto t = csv::parse_string("x,y\n\"a,b\",\"say \"\"hi\"\"\"\n");
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][0] == "a,b");
  CHECK(t.rows[0][1] == "say \"hi\"");
}

TEST_CASE("quoted fields may span lines") {
  auto t = csv::parse_string("x,y\n\"line1\nline2\",z\n");
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][0] == "line1\nline2");
  CHECK(t.rows[0][1] == "z");
  CHECK(t.row_lines[0] == 2);
}

TEST_CASE("CRLF line endings are tolerated") {
  auto t = csv::parse_string("a,b\r\n1,2\r\n");
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0] == std::vector<std::string>{"1", "2"});
}

TEST_CASE("missing final newline is fine") {
  auto t = csv::parse_string("a,b\n1,2");
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][1] == "2");
}

TEST_CASE("row width mismatch names the line") {
  try {
    csv::parse_string("a,b\n1,2\n1,2,3\n");
    FAIL("expected ParseError");
  } catch (const sarckit::ParseError& e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
}

TEST_CASE("unterminated quote is an error") {
  CHECK_THROWS_AS(csv::parse_string("a,b\n\"oops,2\n"), sarckit::ParseError);
}

TEST_CASE("empty input lacks a header") {
  CHECK_THROWS_AS(csv::parse_string(""), sarckit::ParseError);
}

TEST_CASE("escape_field round-trips through the parser") {
  const std::string nasty = "he said \"hi\", then\nleft";
  std::string file = "c\n" + csv::escape_field(nasty) + "\n";
  auto t = csv::parse_string(file);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][0] == nasty);
}

TEST_CASE("unicode text passes through untouched") {
  auto t = csv::parse_string("w\nيا سلام 🙂\n");
  CHECK(t.rows[0][0] == "يا سلام 🙂");
}
