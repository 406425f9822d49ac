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

#include "sarckit/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "sarckit/csv.hpp"
#include "sarckit/rng.hpp"

namespace sarckit {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// types.hpp helpers

Language language_from_string(const std::string& s) {
  if (s == "en") return Language::en;
  if (s == "ar") return Language::ar;
  throw ValidationError("unknown language: " + s);
}

const char* to_string(Source s) {
  switch (s) {
    case Source::original: return "original";
    case Source::twitter_api: return "twitter_api";
    case Source::semeval2018: return "semeval2018";
    case Source::arsarcasm_v2: return "arsarcasm_v2";
    case Source::augmented: return "augmented";
  }
  return "?";
}

Source source_from_string(const std::string& s) {
  for (Source v : {Source::original, Source::twitter_api, Source::semeval2018,
                   Source::arsarcasm_v2, Source::augmented})
    if (s == to_string(v)) return v;
  throw ValidationError("unknown source: " + s);
}

const char* to_string(Dialect d) {
  switch (d) {
    case Dialect::msa: return "msa";
    case Dialect::egyptian: return "egyptian";
    case Dialect::levantine: return "levantine";
    case Dialect::maghrebi: return "maghrebi";
    case Dialect::gulf: return "gulf";
  }
  return "?";
}

namespace {
std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}
}  // namespace

Dialect dialect_from_string(const std::string& s) {
  std::string l = lower(trim(s));
  if (l == "msa" || l == "modern standard arabic") return Dialect::msa;
  if (l == "egyptian" || l == "egypt") return Dialect::egyptian;
  if (l == "levantine" || l == "levant") return Dialect::levantine;
  if (l == "maghrebi" || l == "magreb" || l == "maghreb") return Dialect::maghrebi;
  if (l == "gulf") return Dialect::gulf;
  throw ValidationError("unknown dialect: " + s);
}

const char* label_name(int label) {
  switch (label) {
    case kSarcasm: return "sarcasm";
    case kIrony: return "irony";
    case kSatire: return "satire";
    case kUnderstatement: return "understatement";
    case kOverstatement: return "overstatement";
    case kRhetoricalQuestion: return "rhetorical_question";
  }
  return "?";
}

const char* to_string(AugMethod m) {
  switch (m) {
    case AugMethod::external_merge: return "external_merge";
    case AugMethod::embedding_substitution: return "embedding_substitution";
    case AugMethod::repetition: return "repetition";
  }
  return "?";
}

AugMethod aug_method_from_string(const std::string& s) {
  for (AugMethod v : {AugMethod::external_merge, AugMethod::embedding_substitution,
                      AugMethod::repetition})
    if (s == to_string(v)) return v;
  throw ValidationError("unknown augmentation method: " + s);
}

void validate_record(const TweetRecord& r) {
  if (trim(r.text).empty())
    throw ValidationError("record " + r.id + ": empty tweet text");
  if (r.labels.has_value() && !(r.sarcastic.has_value() && *r.sarcastic))
    throw ValidationError("record " + r.id +
                          ": labels present on a non-sarcastic record");
  if (r.rephrase.has_value() && r.sarcastic.has_value() && !*r.sarcastic)
    throw ValidationError("record " + r.id +
                          ": rephrase present on a non-sarcastic record");
}

void validate_dataset(const Dataset& ds) {
  std::unordered_set<std::string> ids;
  ids.reserve(ds.records.size());
  for (const TweetRecord& r : ds.records) {
    validate_record(r);
    if (!ids.insert(r.id).second)
      throw ValidationError("dataset " + ds.name + ": duplicate id " + r.id);
  }
}

// ---------------------------------------------------------------------------
// CSV loading

namespace {

bool is_absent_cell(const std::string& raw) {
  std::string t = trim(raw);
  return t.empty() || t == "NaN" || t == "nan" || t == "NAN";
}

std::optional<bool> parse_bool_cell(const std::string& raw, std::size_t line) {
  if (is_absent_cell(raw)) return std::nullopt;
  std::string t = lower(trim(raw));
  if (t == "1" || t == "true" || t == "1.0") return true;
  if (t == "0" || t == "false" || t == "0.0") return false;
  throw ParseError("csv row at line " + std::to_string(line) +
                   ": cannot parse boolean cell '" + raw + "'");
}

const char* kLabelColumns[kNumLabels] = {
    "sarcasm", "irony",         "satire",
    "understatement", "overstatement", "rhetorical_question"};

}  // namespace

LoadResult load_csv_string(const std::string& content, Language language,
                           const std::string& name) {
  csv::Table table = csv::parse_string(content);

  std::map<std::string, std::size_t> columns;
  for (std::size_t i = 0; i < table.header.size(); ++i)
    columns[lower(trim(table.header[i]))] = i;

  LoadResult result;
  result.dataset.name = name;
  result.dataset.language = language;

  if (!columns.count("tweet"))
    throw ParseError("csv " + name + ": missing required 'tweet' column");

  static const std::unordered_set<std::string> known = {
      "tweet",  "sarcastic", "rephrase",       "sarcasm",
      "irony",  "satire",    "understatement", "overstatement",
      "rhetorical_question", "dialect"};
  for (const auto& [col, idx] : columns)
    if (!known.count(col))
      result.warnings.push_back("ignored unknown column '" + col + "'");

  auto cell = [&](const std::vector<std::string>& row,
                  const char* col) -> const std::string* {
    auto it = columns.find(col);
    if (it == columns.end()) return nullptr;
    return &row[it->second];
  };

  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    std::size_t line = table.row_lines[i];
    const std::string* tweet = cell(row, "tweet");
    if (tweet == nullptr || is_absent_cell(*tweet)) {
      ++result.dropped_rows;
      continue;
    }
    TweetRecord r;
    r.id = name + ":" + std::to_string(i);
    r.text = trim(*tweet);
    if (const std::string* c = cell(row, "sarcastic"))
      r.sarcastic = parse_bool_cell(*c, line);
    if (const std::string* c = cell(row, "rephrase"))
      if (!is_absent_cell(*c)) r.rephrase = trim(*c);
    if (const std::string* c = cell(row, "dialect"))
      if (!is_absent_cell(*c)) r.dialect = dialect_from_string(*c);

    LabelVector labels;
    int present = 0;
    for (int l = 0; l < kNumLabels; ++l) {
      if (const std::string* c = cell(row, kLabelColumns[l])) {
        std::optional<bool> v = parse_bool_cell(*c, line);
        if (v.has_value()) {
          ++present;
          labels[l] = *v;
        }
      }
    }
    // Labels annotate sarcastic tweets only. A row carrying a set label bit
    // implies sarcastic; all-zero label cells on a non-sarcastic row are
    // treated as absent labels, not an annotation.
    if (labels.any()) {
      r.labels = labels;
      if (!r.sarcastic.has_value()) r.sarcastic = true;
    } else if (present == kNumLabels && r.sarcastic.value_or(false)) {
      r.labels = labels;
    }
    if (r.rephrase.has_value() && !r.sarcastic.has_value()) r.sarcastic = true;

    validate_record(r);
    result.dataset.records.push_back(std::move(r));
  }
  validate_dataset(result.dataset);
  return result;
}

LoadResult load_csv(const std::string& path, Language language) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_csv_string(buf.str(), language,
                         std::filesystem::path(path).stem().string());
}

// ---------------------------------------------------------------------------
// JSON-lines persistence

std::string record_to_json(const TweetRecord& r) {
  ordered_json j;
  j["id"] = r.id;
  j["text"] = r.text;
  if (r.sarcastic.has_value()) j["sarcastic"] = *r.sarcastic;
  if (r.rephrase.has_value()) j["rephrase"] = *r.rephrase;
  if (r.labels.has_value()) {
    ordered_json labels;
    for (int l = 0; l < kNumLabels; ++l) labels[label_name(l)] = (*r.labels)[l];
    j["labels"] = labels;
  }
  if (r.dialect.has_value()) j["dialect"] = to_string(*r.dialect);
  j["source"] = to_string(r.source);
  if (r.provenance.has_value()) {
    ordered_json p;
    p["method"] = to_string(r.provenance->method);
    p["parent_id"] = r.provenance->parent_id;
    if (!r.provenance->replaced.empty()) {
      ordered_json reps = ordered_json::array();
      for (const WordReplacement& w : r.provenance->replaced)
        reps.push_back({{"position", w.position},
                        {"original", w.original},
                        {"substitute", w.substitute}});
      p["replaced"] = reps;
    }
    j["provenance"] = p;
  }
  return j.dump();
}

TweetRecord record_from_json(const std::string& line) {
  ordered_json j = ordered_json::parse(line);
  TweetRecord r;
  r.id = j.at("id").get<std::string>();
  r.text = j.at("text").get<std::string>();
  if (j.contains("sarcastic")) r.sarcastic = j["sarcastic"].get<bool>();
  if (j.contains("rephrase")) r.rephrase = j["rephrase"].get<std::string>();
  if (j.contains("labels")) {
    LabelVector labels;
    for (int l = 0; l < kNumLabels; ++l)
      labels[l] = j["labels"].value(label_name(l), false);
    r.labels = labels;
  }
  if (j.contains("dialect"))
    r.dialect = dialect_from_string(j["dialect"].get<std::string>());
  if (j.contains("source"))
    r.source = source_from_string(j["source"].get<std::string>());
  if (j.contains("provenance")) {
    AugmentationProvenance p;
    p.method = aug_method_from_string(j["provenance"].at("method").get<std::string>());
    p.parent_id = j["provenance"].value("parent_id", "");
    if (j["provenance"].contains("replaced")) {
      for (const auto& rep : j["provenance"]["replaced"]) {
        WordReplacement w;
        w.position = rep.at("position").get<int>();
        w.original = rep.at("original").get<std::string>();
        w.substitute = rep.at("substitute").get<std::string>();
        p.replaced.push_back(std::move(w));
      }
    }
    r.provenance = std::move(p);
  }
  return r;
}

void save_jsonl(const Dataset& ds, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  for (const TweetRecord& r : ds.records) out << record_to_json(r) << '\n';
}

Dataset load_jsonl(const std::string& path, Language language) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  Dataset ds;
  ds.name = std::filesystem::path(path).stem().string();
  ds.language = language;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (trim(line).empty()) continue;
    try {
      ds.records.push_back(record_from_json(line));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return ds;
}

void save_pairs_jsonl(const PairDataset& ds, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  for (const PairRecord& r : ds.records) {
    ordered_json j;
    j["id"] = r.id;
    j["text_a"] = r.text_a;
    j["text_b"] = r.text_b;
    j["label"] = r.label;
    out << j.dump() << '\n';
  }
}

PairDataset load_pairs_jsonl(const std::string& path, Language language) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  PairDataset ds;
  ds.name = std::filesystem::path(path).stem().string();
  ds.language = language;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ordered_json j = ordered_json::parse(line);
    PairRecord r;
    r.id = j.at("id").get<std::string>();
    r.text_a = j.at("text_a").get<std::string>();
    r.text_b = j.at("text_b").get<std::string>();
    r.label = j.at("label").get<int>();
    ds.records.push_back(std::move(r));
  }
  return ds;
}

// ---------------------------------------------------------------------------
// Splitting

std::pair<Dataset, Dataset> split_train_val(const Dataset& ds,
                                            const SplitSpec& spec) {
  if (ds.empty()) throw ConfigError("split_train_val: empty dataset");
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
    throw ConfigError("split_train_val: train_fraction must be in (0,1)");

  // Bucket indices by stratum, shuffle each, take the floor share per
  // stratum for training. Selection keeps original record order.
  std::vector<std::vector<std::size_t>> strata;
  if (spec.stratify_on == SplitSpec::Stratify::sarcastic) {
    strata.resize(2);
    for (std::size_t i = 0; i < ds.records.size(); ++i)
      strata[ds.records[i].sarcastic.value_or(false) ? 1 : 0].push_back(i);
  } else {
    strata.resize(1);
    for (std::size_t i = 0; i < ds.records.size(); ++i) strata[0].push_back(i);
  }

  SplitRng rng(spec.seed);
  std::vector<bool> in_train(ds.records.size(), false);
  int s = 0;
  for (auto& stratum : strata) {
    SplitRng r = rng.fork("split:stratum:" + std::to_string(s++));
    r.shuffle(stratum);
    std::size_t take = static_cast<std::size_t>(
        std::floor(spec.train_fraction * static_cast<double>(stratum.size())));
    for (std::size_t i = 0; i < take; ++i) in_train[stratum[i]] = true;
  }

  Dataset train, val;
  train.name = ds.name + "-train";
  val.name = ds.name + "-val";
  train.language = val.language = ds.language;
  for (std::size_t i = 0; i < ds.records.size(); ++i)
    (in_train[i] ? train : val).records.push_back(ds.records[i]);
  return {std::move(train), std::move(val)};
}

// ---------------------------------------------------------------------------
// Stats

double round1(double x) { return std::round(x * 10.0) / 10.0; }

StatsSummary dataset_stats(const Dataset& ds) {
  StatsSummary s;
  s.total = ds.records.size();
  for (const TweetRecord& r : ds.records) {
    if (r.sarcastic.value_or(false))
      ++s.sarcastic;
    else
      ++s.non_sarcastic;
    if (r.labels.has_value())
      for (int l = 0; l < kNumLabels; ++l)
        if ((*r.labels)[l]) ++s.label_counts[static_cast<std::size_t>(l)];
    if (r.dialect.has_value()) ++s.dialect_counts[*r.dialect];
    std::istringstream words(r.text);
    std::size_t count = 0;
    std::string w;
    while (words >> w) ++count;
    ++s.word_count_histogram[count];
  }
  if (s.total > 0) {
    double t = static_cast<double>(s.total);
    s.sarcastic_percent = round1(100.0 * static_cast<double>(s.sarcastic) / t);
    s.non_sarcastic_percent =
        round1(100.0 * static_cast<double>(s.non_sarcastic) / t);
    for (int l = 0; l < kNumLabels; ++l)
      s.label_percents[static_cast<std::size_t>(l)] = round1(
          100.0 * static_cast<double>(s.label_counts[static_cast<std::size_t>(l)]) / t);
    for (const auto& [d, c] : s.dialect_counts)
      s.dialect_percents[d] = round1(100.0 * static_cast<double>(c) / t);
  }
  return s;
}

std::string StatsSummary::to_json() const {
  ordered_json j;
  j["total"] = total;
  j["sarcastic"] = sarcastic;
  j["non_sarcastic"] = non_sarcastic;
  j["sarcastic_percent"] = sarcastic_percent;
  j["non_sarcastic_percent"] = non_sarcastic_percent;
  ordered_json labels;
  for (int l = 0; l < kNumLabels; ++l) {
    labels[label_name(l)] = {
        {"count", label_counts[static_cast<std::size_t>(l)]},
        {"percent", label_percents[static_cast<std::size_t>(l)]}};
  }
  j["labels"] = labels;
  ordered_json dialects;
  for (const auto& [d, c] : dialect_counts)
    dialects[to_string(d)] = {{"count", c}, {"percent", dialect_percents.at(d)}};
  j["dialects"] = dialects;
  ordered_json hist;
  for (const auto& [words, c] : word_count_histogram)
    hist[std::to_string(words)] = c;
  j["word_count_histogram"] = hist;
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// Ingestion

FetchResult fetch_tweets_by_id(const std::vector<std::string>& ids,
                               TweetTransport& transport, Language language,
                               const FetchOptions& opts) {
  auto sleep = opts.sleep ? opts.sleep : [](double seconds) {
    std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
  };
  FetchResult result;
  result.dataset.name = "twitter_api";
  result.dataset.language = language;
  std::vector<std::string> unfetched;
  for (const std::string& id : ids) {
    std::optional<std::string> text;
    bool ok = false;
    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
      try {
        text = transport.get_tweet(id);
        ok = true;
        break;
      } catch (const TweetTransport::TransportUnavailable&) {
        if (attempt + 1 < opts.max_attempts)
          sleep(opts.backoff_base_seconds * std::pow(2.0, attempt));
      }
    }
    if (!ok) {
      unfetched.push_back(id);
      continue;
    }
    if (!text.has_value()) {
      result.missing.push_back(id);
      continue;
    }
    TweetRecord r;
    r.id = id;
    r.text = *text;
    r.source = Source::twitter_api;
    result.dataset.records.push_back(std::move(r));
  }
  if (!unfetched.empty()) {
    std::string msg = "transport failed for ids:";
    for (const std::string& id : unfetched) msg += " " + id;
    throw IngestionError(msg);
  }
  return result;
}

}  // namespace sarckit
