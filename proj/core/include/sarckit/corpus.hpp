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

#ifndef SARCKIT_CORPUS_HPP
#define SARCKIT_CORPUS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sarckit/types.hpp"

namespace sarckit {

struct LoadResult {
  Dataset dataset;
  std::size_t dropped_rows = 0;  // rows whose tweet cell was empty/NAN
  std::vector<std::string> warnings;
};

// Reads a shared-task CSV. Recognized columns (case-insensitive): tweet,
// sarcastic, rephrase, sarcasm, irony, satire, understatement, overstatement,
// rhetorical_question, dialect. Extra columns are ignored with a warning.
// Empty/"NaN"/"nan" cells map to absent fields; rows without tweet text are
// dropped and counted.
LoadResult load_csv(const std::string& path, Language language);
LoadResult load_csv_string(const std::string& content, Language language,
                           const std::string& name);

// JSON-lines persistence, one record per line, absent fields omitted.
void save_jsonl(const Dataset& ds, const std::string& path);
Dataset load_jsonl(const std::string& path, Language language);
std::string record_to_json(const TweetRecord& r);
TweetRecord record_from_json(const std::string& line);

void save_pairs_jsonl(const PairDataset& ds, const std::string& path);
PairDataset load_pairs_jsonl(const std::string& path, Language language);

struct SplitSpec {
  double train_fraction = 0.6;
  enum class Stratify { sarcastic, none } stratify_on = Stratify::sarcastic;
  std::uint64_t seed = 0;
};

// Deterministic partition; stratified splits keep each class proportion
// within one record of the source.
std::pair<Dataset, Dataset> split_train_val(const Dataset& ds,
                                            const SplitSpec& spec);

struct StatsSummary {
  std::size_t total = 0;
  std::size_t sarcastic = 0;
  std::size_t non_sarcastic = 0;
  double sarcastic_percent = 0.0;      // one decimal
  double non_sarcastic_percent = 0.0;  // one decimal
  std::array<std::size_t, kNumLabels> label_counts{};
  std::array<double, kNumLabels> label_percents{};
  std::map<Dialect, std::size_t> dialect_counts;
  std::map<Dialect, double> dialect_percents;
  std::map<std::size_t, std::size_t> word_count_histogram;

  std::string to_json() const;
};

StatsSummary dataset_stats(const Dataset& ds);

// Rounds to one decimal the way stats tables report percentages.
double round1(double x);

// Abstract get-tweet-by-id transport. Implementations return the tweet text,
// nullopt for a not-found id, and throw TransportUnavailable on
// network-level failure (retried by fetch_tweets_by_id).
struct TweetTransport {
  struct TransportUnavailable : Error {
    using Error::Error;
  };
  virtual ~TweetTransport() = default;
  virtual std::optional<std::string> get_tweet(const std::string& id) = 0;
};

// Reference test double: an in-memory id -> text map.
struct MapTransport : TweetTransport {
  std::map<std::string, std::string> tweets;
  std::optional<std::string> get_tweet(const std::string& id) override {
    auto it = tweets.find(id);
    if (it == tweets.end()) return std::nullopt;
    return it->second;
  }
};

struct FetchOptions {
  int max_attempts = 3;
  double backoff_base_seconds = 0.5;  // doubles per retry
  // Injectable for tests; defaults to a real sleep.
  std::function<void(double)> sleep = {};
};

struct FetchResult {
  Dataset dataset;  // found tweets, input order, source=twitter_api
  std::vector<std::string> missing;
};

// Partial availability is not an error; transport failures are retried and
// then surfaced as IngestionError listing the unfetched ids.
FetchResult fetch_tweets_by_id(const std::vector<std::string>& ids,
                               TweetTransport& transport, Language language,
                               const FetchOptions& opts = {});

}  // namespace sarckit

#endif  // SARCKIT_CORPUS_HPP
