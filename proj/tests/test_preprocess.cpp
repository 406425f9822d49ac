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

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "golden_preprocess.h"
#include "sarckit/preprocess.hpp"
#include "sarckit/rng.hpp"

using namespace sarckit;
using sarckit_tests::kGoldenCases;
using sarckit_tests::kNumGoldenCases;

namespace {

const Lexicons& lex() {
  static Lexicons l = Lexicons::load(Lexicons::default_data_dir());
  return l;
}

}  // namespace

TEST_CASE("golden pipeline cases are byte-exact") {
  CHECK(kNumGoldenCases == 30);
  for (std::size_t i = 0; i < kNumGoldenCases; ++i) {
    const auto& c = kGoldenCases[i];
    CAPTURE(i);
    CAPTURE(c.input);
    CHECK(apply_pipeline(c.input, c.type, c.language, lex()) == c.expected);
  }
}

TEST_CASE("type I is the identity on arbitrary text") {
  SplitRng rng(41);
  for (int i = 0; i < 1000; ++i) {
    std::string s;
    std::size_t len = rng.below(40);
    for (std::size_t j = 0; j < len; ++j) {
      switch (rng.below(4)) {
        case 0:
          s += static_cast<char>('a' + rng.below(26));
          break;
        case 1:
          s += static_cast<char>(' ' + rng.below(95));  // printable ASCII
          break;
        case 2:
          s += utf8::encode_one(0x600 + static_cast<std::uint32_t>(rng.below(0xFF)));
          break;
        default:
          s += utf8::encode_one(0x1F600 + static_cast<std::uint32_t>(rng.below(80)));
          break;
      }
    }
    CHECK(apply_pipeline(s, PreprocessType::I, Language::en, lex()) == s);
  }
}

TEST_CASE("pipelines are cumulative") {
  const std::string text = "The caaaats can't stop :) @bob https://x.co/q";
  std::string t2 = normalize_tokens(text, lex());
  CHECK(apply_pipeline(text, PreprocessType::II, Language::en, lex()) == t2);
  std::string t3 =
      expand_contractions(collapse_repeats(substitute_smileys(t2, lex())), lex());
  CHECK(apply_pipeline(text, PreprocessType::III, Language::en, lex()) == t3);
  std::string t4 = stem_and_filter(t3, Language::en, lex());
  CHECK(apply_pipeline(text, PreprocessType::IV, Language::en, lex()) == t4);
}

TEST_CASE("normalization matches the shipped emoji table") {
  // Independent read of the data file rather than the loaded map.
  std::ifstream in(Lexicons::default_data_dir() + "/emoji_map.tsv");
  REQUIRE(in.good());
  std::string line;
  std::string expected;
  while (std::getline(in, line)) {
    if (line.rfind("1F642\t", 0) == 0) expected = line.substr(6);
  }
  REQUIRE_FALSE(expected.empty());
  CHECK(normalize_tokens("\xF0\x9F\x99\x82", lex()) == expected);
}

TEST_CASE("url and mention edge cases") {
  CHECK(normalize_tokens("http://a.b/c?d=1&e=2", lex()) == "HTTPURL");
  CHECK(normalize_tokens("go to www.news.com/story now", lex()) ==
        "go to HTTPURL now");
  // A trailing mention and one glued to punctuation.
  CHECK(normalize_tokens("thanks @someone", lex()) == "thanks @USER");
  CHECK(normalize_tokens("(@nested) text", lex()) == "(@USER) text");
  // Sixteen name characters exceed the handle limit.
  CHECK(normalize_tokens("@abcdefghijklmnopq", lex()) ==
        "@abcdefghijklmnopq");
  // A lone @ is left alone.
  CHECK(normalize_tokens("a @ b", lex()) == "a @ b");
}

TEST_CASE("collapse_repeats matches a brute-force oracle") {
  // Oracle: walk codepoints, emit each, but drop a letter/punct codepoint
  // equal to both of its two predecessors.
  auto oracle = [](const std::string& s) {
    auto cps = utf8::decode(s);
    auto is_target = [](std::uint32_t cp) {
      if (cp < 0x80)
        return std::isalpha(static_cast<int>(cp)) != 0 ||
               std::ispunct(static_cast<int>(cp)) != 0;
      return cp < 0x3000;
    };
    std::vector<std::uint32_t> out;
    for (std::uint32_t cp : cps) {
      std::size_t n = out.size();
      if (n >= 2 && out[n - 1] == cp && out[n - 2] == cp && is_target(cp))
        continue;
      out.push_back(cp);
    }
    return utf8::encode(out);
  };
  SplitRng rng(29);
  const std::vector<std::string> alphabet = {"a", "b", "!", ".",
                                             " ", "7", "ه", "🙂"};
  for (int i = 0; i < 500; ++i) {
    std::string s;
    std::size_t len = rng.below(30);
    for (std::size_t j = 0; j < len; ++j) s += alphabet[rng.below(alphabet.size())];
    CAPTURE(s);
    CHECK(collapse_repeats(s) == oracle(s));
  }
  // Digits and spaces are never collapsed.
  CHECK(collapse_repeats("1111   2222") == "1111   2222");
  CHECK(collapse_repeats("aaaa!!!!") == "aa!!");
}

TEST_CASE("emoticon substitution prefers the longest match") {
  CHECK(substitute_smileys(":-)", lex()) == "smiley");
  CHECK(substitute_smileys(":)", lex()) == "smiley");
  CHECK(substitute_smileys("ok:)done", lex()) == "ok smiley done");
  // U+2011 non-breaking hyphen variant.
  CHECK(substitute_smileys(":\xE2\x80\x91)", lex()) == "smiley");
  CHECK(substitute_smileys("xD", lex()) == "playful");
}

TEST_CASE("contraction expansion is case-aware and whitespace-preserving") {
  CHECK(expand_contractions("can't", lex()) == "cannot");
  CHECK(expand_contractions("Can't", lex()) == "Cannot");
  CHECK(expand_contractions("a  b isn't\tok", lex()) == "a  b is not\tok");
  // U+2019 right single quote is treated as an apostrophe.
  CHECK(expand_contractions("don\xE2\x80\x99t", lex()) == "do not");
  // Unknown tokens pass through.
  CHECK(expand_contractions("cant", lex()) == "cant");
}

TEST_CASE("english light stemmer cases") {
  CHECK(light_stem_en("stories") == "story");
  CHECK(light_stem_en("glasses") == "glass");
  CHECK(light_stem_en("running") == "run");
  CHECK(light_stem_en("happened") == "happen");
  CHECK(light_stem_en("cats") == "cat");
  CHECK(light_stem_en("bus") == "bus");    // -us is protected
  CHECK(light_stem_en("class") == "class");  // -ss is protected
  CHECK(light_stem_en("sing") == "sing");  // too short for -ing
}

TEST_CASE("arabic light stemmer cases") {
  CHECK(light_stem_ar("الكتاب") == "كتاب");
  CHECK(light_stem_ar("والسيارة") == "سيار");
  // Too short to strip further.
  CHECK(light_stem_ar("ال") == "ال");
}

TEST_CASE("stopword removal lowercases for lookup") {
  CHECK(stem_and_filter("The THE the", Language::en, lex()).empty());
  CHECK(stem_and_filter("Trees are tall", Language::en, lex()) == "Tree tall");
}

TEST_CASE("types II and III are idempotent on their own output") {
  for (std::size_t i = 0; i < kNumGoldenCases; ++i) {
    const auto& c = kGoldenCases[i];
    if (c.type != PreprocessType::II && c.type != PreprocessType::III) continue;
    std::string once = apply_pipeline(c.input, c.type, c.language, lex());
    CHECK(apply_pipeline(once, c.type, c.language, lex()) == once);
  }
}

TEST_CASE("utf8 round-trips and counts codepoints") {
  const std::string s = "aه🙂";
  auto cps = utf8::decode(s);
  REQUIRE(cps.size() == 3);
  CHECK(cps[0] == 0x61);
  CHECK(cps[1] == 0x647);
  CHECK(cps[2] == 0x1F642);
  CHECK(utf8::encode(cps) == s);
  CHECK(utf8::length(s) == 3);
  // Invalid bytes decode to U+FFFD rather than crashing.
  CHECK(utf8::decode("\xFF")[0] == 0xFFFD);
}

TEST_CASE("preprocess type names round-trip") {
  for (auto t : {PreprocessType::I, PreprocessType::II, PreprocessType::III,
                 PreprocessType::IV})
    CHECK(preprocess_type_from_string(to_string(t)) == t);
  CHECK_THROWS_AS(preprocess_type_from_string("V"), ConfigError);
}
