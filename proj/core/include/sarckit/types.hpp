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

#ifndef SARCKIT_TYPES_HPP
#define SARCKIT_TYPES_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sarckit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed input files (CSV, vector files, JSON-lines).
struct ParseError : Error {
  using Error::Error;
};
// Record- or field-level invariant violations.
struct ValidationError : Error {
  using Error::Error;
};
// Bad configuration (missing stemmer, zero counts, invalid fractions).
struct ConfigError : Error {
  using Error::Error;
};
// Transport failed after retries during tweet ingestion.
struct IngestionError : Error {
  using Error::Error;
};
// Bias-schedule pool exhaustion and related augmentation failures.
struct ScheduleError : Error {
  using Error::Error;
};
// Label balancing cannot proceed (empty label pool, unreachable target).
struct BalanceError : Error {
  using Error::Error;
};
// Training aborted (divergence).
struct TrainingError : Error {
  using Error::Error;
};

enum class Language { en, ar };

inline const char* to_string(Language l) { return l == Language::en ? "en" : "ar"; }

Language language_from_string(const std::string& s);

enum class Source { original, twitter_api, semeval2018, arsarcasm_v2, augmented };

const char* to_string(Source s);
Source source_from_string(const std::string& s);

enum class Dialect { msa, egyptian, levantine, maghrebi, gulf };

const char* to_string(Dialect d);
// Case-insensitive; throws ValidationError on unknown strings.
Dialect dialect_from_string(const std::string& s);

// The six ironic-speech labels, fixed index order.
enum LabelId {
  kSarcasm = 0,
  kIrony = 1,
  kSatire = 2,
  kUnderstatement = 3,
  kOverstatement = 4,
  kRhetoricalQuestion = 5,
};
constexpr int kNumLabels = 6;
const char* label_name(int label);

struct LabelVector {
  std::array<bool, kNumLabels> bits{};

  bool& operator[](int i) { return bits[static_cast<std::size_t>(i)]; }
  bool operator[](int i) const { return bits[static_cast<std::size_t>(i)]; }
  bool any() const {
    for (bool b : bits)
      if (b) return true;
    return false;
  }
  bool operator==(const LabelVector&) const = default;
};

enum class AugMethod { external_merge, embedding_substitution, repetition };

const char* to_string(AugMethod m);
AugMethod aug_method_from_string(const std::string& s);

struct WordReplacement {
  int position = 0;  // whitespace-token index in the source text
  std::string original;
  std::string substitute;
  bool operator==(const WordReplacement&) const = default;
};

struct AugmentationProvenance {
  AugMethod method = AugMethod::repetition;
  std::string parent_id;
  std::vector<WordReplacement> replaced;
  bool operator==(const AugmentationProvenance&) const = default;
};

struct TweetRecord {
  std::string id;
  std::string text;
  std::optional<bool> sarcastic;
  std::optional<std::string> rephrase;
  std::optional<LabelVector> labels;
  std::optional<Dialect> dialect;
  Source source = Source::original;
  std::optional<AugmentationProvenance> provenance;

  bool operator==(const TweetRecord&) const = default;
};

// Throws ValidationError if the record breaks a schema invariant:
// empty text, labels or rephrase on a non-sarcastic record.
void validate_record(const TweetRecord& r);

struct Dataset {
  std::string name;
  Language language = Language::en;
  std::vector<TweetRecord> records;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
};

// Throws ValidationError on duplicate ids or invalid records.
void validate_dataset(const Dataset& ds);

// Subtask-C pair sample. label 0 means text_a holds the sarcastic tweet.
struct PairRecord {
  std::string id;
  std::string text_a;
  std::string text_b;
  int label = 0;
  bool operator==(const PairRecord&) const = default;
};

struct PairDataset {
  std::string name;
  Language language = Language::en;
  std::vector<PairRecord> records;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
};

}  // namespace sarckit

#endif  // SARCKIT_TYPES_HPP
