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

#ifndef SARCKIT_PREPROCESS_HPP
#define SARCKIT_PREPROCESS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sarckit/types.hpp"

namespace sarckit {

// Cumulative tweet-normalization pipelines.
enum class PreprocessType { I = 1, II = 2, III = 3, IV = 4 };

PreprocessType preprocess_type_from_string(const std::string& s);
const char* to_string(PreprocessType t);

using Stemmer = std::function<std::string(const std::string&)>;

struct Lexicons {
  // Unicode codepoint -> shortcode text (e.g. U+1F642 -> slightly_smiling_face).
  std::unordered_map<std::uint32_t, std::string> emoji_map;
  // ASCII emoticon -> one of {smiley, sad, playful}; longest-match-first.
  std::map<std::string, std::string> smiley_map;
  // Contraction (lowercased) -> expansion.
  std::unordered_map<std::string, std::string> contraction_map;
  std::unordered_set<std::string> stopwords_en;
  std::unordered_set<std::string> stopwords_ar;
  Stemmer stemmer_en;
  Stemmer stemmer_ar;

  const std::unordered_set<std::string>& stopwords(Language l) const {
    return l == Language::en ? stopwords_en : stopwords_ar;
  }
  const Stemmer& stemmer(Language l) const {
    return l == Language::en ? stemmer_en : stemmer_ar;
  }

  // Loads the TSV/word-list data files from a directory:
  //   emoji_map.tsv, smiley_map.tsv, contractions_en.tsv,
  //   stopwords_en.txt, stopwords_ar.txt
  // and wires the shipped light stemmers.
  static Lexicons load(const std::string& data_dir);
  // The data directory this build ships (core/data when running from the
  // build tree, or $SARCKIT_DATA_DIR when set).
  static std::string default_data_dir();
};

// Reference light stemmers behind the pluggable contract.
std::string light_stem_en(const std::string& token);
std::string light_stem_ar(const std::string& token);

// URLs -> HTTPURL, @mentions -> @USER, emoji -> shortcode text.
std::string normalize_tokens(const std::string& text, const Lexicons& lex);

// Runs of >2 identical letters or punctuation capped at 2.
std::string collapse_repeats(const std::string& text);

// ASCII emoticons replaced by their class word (smiley/sad/playful).
std::string substitute_smileys(const std::string& text, const Lexicons& lex);

// Token-wise contraction expansion, case-insensitive match, leading
// capitalization preserved.
std::string expand_contractions(const std::string& text, const Lexicons& lex);

// Stopword removal then stemming, token order preserved.
std::string stem_and_filter(const std::string& text, Language language,
                            const Lexicons& lex);

// Type I = identity; II = normalize_tokens; III = II + smileys + repeats +
// contractions; IV = III + stem_and_filter.
std::string apply_pipeline(const std::string& text, PreprocessType t,
                           Language language, const Lexicons& lex);

namespace utf8 {
// Decodes a UTF-8 string into codepoints; invalid bytes map to U+FFFD.
std::vector<std::uint32_t> decode(const std::string& s);
std::string encode(const std::vector<std::uint32_t>& cps);
std::string encode_one(std::uint32_t cp);
std::size_t length(const std::string& s);
}  // namespace utf8

}  // namespace sarckit

#endif  // SARCKIT_PREPROCESS_HPP
