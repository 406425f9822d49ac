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

#include "sarckit/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <regex>
#include <sstream>

namespace sarckit {

// ---------------------------------------------------------------------------
// UTF-8

namespace utf8 {

std::vector<std::uint32_t> decode(const std::string& s) {
  std::vector<std::uint32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    std::uint32_t cp = 0xFFFD;
    std::size_t len = 1;
    if (c < 0x80) {
      cp = c;
    } else if ((c >> 5) == 0x6 && i + 1 < s.size()) {
      cp = static_cast<std::uint32_t>(c & 0x1F) << 6 |
           (static_cast<unsigned char>(s[i + 1]) & 0x3F);
      len = 2;
    } else if ((c >> 4) == 0xE && i + 2 < s.size()) {
      cp = static_cast<std::uint32_t>(c & 0x0F) << 12 |
           static_cast<std::uint32_t>(static_cast<unsigned char>(s[i + 1]) & 0x3F) << 6 |
           (static_cast<unsigned char>(s[i + 2]) & 0x3F);
      len = 3;
    } else if ((c >> 3) == 0x1E && i + 3 < s.size()) {
      cp = static_cast<std::uint32_t>(c & 0x07) << 18 |
           static_cast<std::uint32_t>(static_cast<unsigned char>(s[i + 1]) & 0x3F) << 12 |
           static_cast<std::uint32_t>(static_cast<unsigned char>(s[i + 2]) & 0x3F) << 6 |
           (static_cast<unsigned char>(s[i + 3]) & 0x3F);
      len = 4;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_one(std::uint32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

std::string encode(const std::vector<std::uint32_t>& cps) {
  std::string out;
  for (std::uint32_t cp : cps) out += encode_one(cp);
  return out;
}

std::size_t length(const std::string& s) { return decode(s).size(); }

}  // namespace utf8

// ---------------------------------------------------------------------------
// PreprocessType

PreprocessType preprocess_type_from_string(const std::string& s) {
  if (s == "I" || s == "1") return PreprocessType::I;
  if (s == "II" || s == "2") return PreprocessType::II;
  if (s == "III" || s == "3") return PreprocessType::III;
  if (s == "IV" || s == "4") return PreprocessType::IV;
  throw ConfigError("unknown preprocessing type: " + s);
}

const char* to_string(PreprocessType t) {
  switch (t) {
    case PreprocessType::I: return "I";
    case PreprocessType::II: return "II";
    case PreprocessType::III: return "III";
    case PreprocessType::IV: return "IV";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Lexicons

namespace {

std::vector<std::pair<std::string, std::string>> read_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("lexicon file missing: " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError("lexicon " + path + ": missing tab in line '" + line + "'");
    out.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return out;
}

std::unordered_set<std::string> read_word_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("lexicon file missing: " + path);
  std::unordered_set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (!line.empty() && line[0] != '#') out.insert(line);
  }
  return out;
}

std::string ascii_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

std::string Lexicons::default_data_dir() {
  if (const char* env = std::getenv("SARCKIT_DATA_DIR")) return env;
#ifdef SARCKIT_DATA_DIR
  return SARCKIT_DATA_DIR;
#else
  return "data";
#endif
}

Lexicons Lexicons::load(const std::string& data_dir) {
  Lexicons lex;
  for (const auto& [cp_hex, shortcode] : read_tsv(data_dir + "/emoji_map.tsv")) {
    lex.emoji_map[static_cast<std::uint32_t>(std::stoul(cp_hex, nullptr, 16))] =
        shortcode;
  }
  for (const auto& [emoticon, word] : read_tsv(data_dir + "/smiley_map.tsv")) {
    if (word != "smiley" && word != "sad" && word != "playful")
      throw ConfigError("smiley_map: value '" + word +
                        "' not in {smiley, sad, playful}");
    lex.smiley_map[emoticon] = word;
  }
  for (const auto& [contraction, expansion] :
       read_tsv(data_dir + "/contractions_en.tsv")) {
    if (contraction.find('\'') == std::string::npos)
      throw ConfigError("contraction_map: key '" + contraction +
                        "' has no apostrophe");
    lex.contraction_map[ascii_lower(contraction)] = expansion;
  }
  lex.stopwords_en = read_word_list(data_dir + "/stopwords_en.txt");
  lex.stopwords_ar = read_word_list(data_dir + "/stopwords_ar.txt");
  lex.stemmer_en = light_stem_en;
  lex.stemmer_ar = light_stem_ar;
  return lex;
}

// ---------------------------------------------------------------------------
// Stemmers

std::string light_stem_en(const std::string& token) {
  std::string lower = ascii_lower(token);
  auto ends_with = [&](const char* suffix) {
    std::size_t n = std::strlen(suffix);
    return lower.size() >= n && lower.compare(lower.size() - n, n, suffix) == 0;
  };
  auto undouble = [](std::string s) {
    if (s.size() >= 2 && s[s.size() - 1] == s[s.size() - 2] &&
        std::isalpha(static_cast<unsigned char>(s.back())) &&
        !std::strchr("aeiou", s.back()))
      s.pop_back();
    return s;
  };
  std::string t = token;
  if (ends_with("ies") && lower.size() > 4) {
    t = t.substr(0, t.size() - 3) + "y";
  } else if (ends_with("sses")) {
    t = t.substr(0, t.size() - 2);
  } else if (ends_with("ing") && lower.size() > 5) {
    t = undouble(t.substr(0, t.size() - 3));
  } else if (ends_with("ed") && lower.size() > 4) {
    t = undouble(t.substr(0, t.size() - 2));
  } else if (ends_with("s") && !ends_with("ss") && !ends_with("us") &&
             lower.size() > 3) {
    t = t.substr(0, t.size() - 1);
  }
  return t;
}

std::string light_stem_ar(const std::string& token) {
  std::vector<std::uint32_t> cps = utf8::decode(token);
  static const std::vector<std::vector<std::uint32_t>> prefixes = {
      {0x0648, 0x0627, 0x0644},  // wa + al
      {0x0628, 0x0627, 0x0644},  // bi + al
      {0x0643, 0x0627, 0x0644},  // ka + al
      {0x0641, 0x0627, 0x0644},  // fa + al
      {0x0627, 0x0644},          // al
      {0x0644, 0x0644},          // li-l
      {0x0648},                  // wa
  };
  static const std::vector<std::vector<std::uint32_t>> suffixes = {
      {0x0647, 0x0627},  // -ha
      {0x0627, 0x0646},  // -an
      {0x0627, 0x062A},  // -at (pl)
      {0x0648, 0x0646},  // -un
      {0x064A, 0x0646},  // -in
      {0x064A, 0x0629},  // -iyya
      {0x0629},          // ta marbuta
      {0x0647},          // -h
      {0x064A},          // -i
  };
  for (const auto& p : prefixes) {
    if (cps.size() >= p.size() + 2 && std::equal(p.begin(), p.end(), cps.begin())) {
      cps.erase(cps.begin(), cps.begin() + static_cast<std::ptrdiff_t>(p.size()));
      break;
    }
  }
  for (const auto& s : suffixes) {
    if (cps.size() >= s.size() + 2 &&
        std::equal(s.rbegin(), s.rend(), cps.rbegin())) {
      cps.resize(cps.size() - s.size());
      break;
    }
  }
  return utf8::encode(cps);
}

// ---------------------------------------------------------------------------
// Transforms

namespace {

const std::regex kSchemeUrl(R"(https?://[^\s]+)");
// Bare shortlink: domain.tld/path with a short alphabetic TLD.
const std::regex kBareUrl(R"((^|[\s])((?:[A-Za-z0-9-]+\.)+[A-Za-z]{2,3}/[^\s]*))");
const std::regex kMention(R"((^|[^A-Za-z0-9_@])@[A-Za-z0-9_]{1,15}(?![A-Za-z0-9_]))");

bool is_ascii_punct(std::uint32_t cp) {
  return cp < 0x80 && std::ispunct(static_cast<int>(cp));
}

bool is_letter(std::uint32_t cp) {
  if (cp < 0x80) return std::isalpha(static_cast<int>(cp)) != 0;
  // Non-ASCII codepoints below the symbol blocks are treated as letters
  // (Latin supplements, Greek, Cyrillic, Arabic, Hebrew...).
  return cp < 0x3000;
}

bool is_space_cp(std::uint32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r';
}

}  // namespace

std::string normalize_tokens(const std::string& text, const Lexicons& lex) {
  std::string s = std::regex_replace(text, kSchemeUrl, "HTTPURL");
  s = std::regex_replace(s, kBareUrl, "$1HTTPURL");
  s = std::regex_replace(s, kMention, "$1@USER");

  // Emoji to shortcode text, space-delimited against neighbors.
  std::vector<std::uint32_t> cps = utf8::decode(s);
  std::string out;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    auto it = lex.emoji_map.find(cps[i]);
    if (it == lex.emoji_map.end()) {
      out += utf8::encode_one(cps[i]);
      continue;
    }
    if (!out.empty() && out.back() != ' ') out += ' ';
    out += it->second;
    if (i + 1 < cps.size() && !is_space_cp(cps[i + 1])) out += ' ';
  }
  return out;
}

std::string collapse_repeats(const std::string& text) {
  std::vector<std::uint32_t> cps = utf8::decode(text);
  std::vector<std::uint32_t> out;
  out.reserve(cps.size());
  std::size_t i = 0;
  while (i < cps.size()) {
    std::size_t run = 1;
    while (i + run < cps.size() && cps[i + run] == cps[i]) ++run;
    std::size_t keep = run;
    if (run > 2 && (is_ascii_punct(cps[i]) || is_letter(cps[i]))) keep = 2;
    for (std::size_t k = 0; k < keep; ++k) out.push_back(cps[i]);
    i += run;
  }
  return utf8::encode(out);
}

std::string substitute_smileys(const std::string& text, const Lexicons& lex) {
  // Longest-match-first at each position.
  std::vector<std::pair<std::string, std::string>> emoticons(
      lex.smiley_map.begin(), lex.smiley_map.end());
  std::sort(emoticons.begin(), emoticons.end(),
            [](const auto& a, const auto& b) {
              if (a.first.size() != b.first.size())
                return a.first.size() > b.first.size();
              return a.first < b.first;
            });
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::pair<std::string, std::string>* hit = nullptr;
    for (const auto& e : emoticons) {
      if (text.compare(i, e.first.size(), e.first) == 0) {
        hit = &e;
        break;
      }
    }
    if (hit == nullptr) {
      out += text[i++];
      continue;
    }
    if (!out.empty() && out.back() != ' ') out += ' ';
    out += hit->second;
    i += hit->first.size();
    if (i < text.size() && text[i] != ' ') out += ' ';
  }
  return out;
}

std::string expand_contractions(const std::string& text, const Lexicons& lex) {
  std::string token;
  std::string out;
  // Walk tokens but preserve the original whitespace between them.
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t ws_end = text.find_first_not_of(" \t\n", pos);
    if (ws_end == std::string::npos) {
      out += text.substr(pos);
      break;
    }
    out += text.substr(pos, ws_end - pos);
    std::size_t tok_end = text.find_first_of(" \t\n", ws_end);
    if (tok_end == std::string::npos) tok_end = text.size();
    token = text.substr(ws_end, tok_end - ws_end);

    // The shared-task data uses both ' and the right single quote.
    std::string key = ascii_lower(token);
    std::size_t q;
    while ((q = key.find("\xE2\x80\x99")) != std::string::npos)
      key.replace(q, 3, "'");

    auto it = lex.contraction_map.find(key);
    if (it == lex.contraction_map.end()) {
      out += token;
    } else {
      std::string expansion = it->second;
      bool capitalized = !token.empty() &&
                         std::isupper(static_cast<unsigned char>(token[0]));
      if (capitalized && !expansion.empty())
        expansion[0] = static_cast<char>(
            std::toupper(static_cast<unsigned char>(expansion[0])));
      out += expansion;
    }
    pos = tok_end;
  }
  return out;
}

std::string stem_and_filter(const std::string& text, Language language,
                            const Lexicons& lex) {
  const Stemmer& stem = lex.stemmer(language);
  if (!stem)
    throw ConfigError(std::string("no stemmer configured for language ") +
                      to_string(language));
  const auto& stopwords = lex.stopwords(language);
  std::istringstream in(text);
  std::string token;
  std::string out;
  while (in >> token) {
    if (stopwords.count(ascii_lower(token))) continue;
    if (!out.empty()) out += ' ';
    out += stem(token);
  }
  return out;
}

std::string apply_pipeline(const std::string& text, PreprocessType t,
                           Language language, const Lexicons& lex) {
  if (t == PreprocessType::I) return text;
  std::string s = normalize_tokens(text, lex);
  if (t == PreprocessType::II) return s;
  s = substitute_smileys(s, lex);
  s = collapse_repeats(s);
  s = expand_contractions(s, lex);
  if (t == PreprocessType::III) return s;
  return stem_and_filter(s, language, lex);
}

}  // namespace sarckit
