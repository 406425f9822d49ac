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

#include <set>
#include <string>

#include <doctest.h>

#include "sarckit/corpus.hpp"
#include "sarckit/rng.hpp"
#include "sarckit/synth.hpp"

using namespace sarckit;

TEST_CASE("csv loading maps cells to schema fields") {
  const std::string content =
      "tweet,sarcastic,rephrase,dialect\n"
      "oh great,1,it is bad actually,\n"
      "plain news,0,,\n";
  LoadResult res = load_csv_string(content, Language::en, "t");
  REQUIRE(res.dataset.size() == 2);
  const TweetRecord& r0 = res.dataset.records[0];
  CHECK(r0.id == "t:0");
  CHECK(r0.text == "oh great");
  CHECK(r0.sarcastic == true);
  CHECK(r0.rephrase == "it is bad actually");
  CHECK_FALSE(r0.dialect.has_value());
  CHECK_FALSE(res.dataset.records[1].sarcastic.value());
}

TEST_CASE("header matching is case-insensitive") {
  LoadResult res = load_csv_string("Tweet,SARCASTIC\nhello,1\n", Language::en, "t");
  REQUIRE(res.dataset.size() == 1);
  CHECK(res.dataset.records[0].sarcastic == true);
}

TEST_CASE("NaN and empty cells become absent fields") {
  LoadResult res = load_csv_string(
      "tweet,sarcastic,rephrase\nhi,NaN,nan\n", Language::en, "t");
  CHECK_FALSE(res.dataset.records[0].sarcastic.has_value());
  CHECK_FALSE(res.dataset.records[0].rephrase.has_value());
}

TEST_CASE("rows without tweet text are dropped and counted") {
  LoadResult res = load_csv_string(
      "tweet,sarcastic\nhello,1\n,0\nNaN,1\nbye,0\n", Language::en, "t");
  CHECK(res.dataset.size() == 2);
  CHECK(res.dropped_rows == 2);
}

TEST_CASE("missing tweet column is a parse error") {
  CHECK_THROWS_AS(load_csv_string("text,sarcastic\na,1\n", Language::en, "t"),
                  ParseError);
}

TEST_CASE("unknown columns are warned about, not fatal") {
  LoadResult res =
      load_csv_string("tweet,mystery\nhello,42\n", Language::en, "t");
  REQUIRE(res.warnings.size() == 1);
  CHECK(res.warnings[0].find("mystery") != std::string::npos);
}

TEST_CASE("a set label bit implies the sarcastic class") {
  const std::string content =
      "tweet,sarcasm,irony,satire,understatement,overstatement,rhetorical_question\n"
      "so ironic,0,1,0,0,0,0\n";
  LoadResult res = load_csv_string(content, Language::en, "t");
  const TweetRecord& r = res.dataset.records[0];
  REQUIRE(r.labels.has_value());
  CHECK((*r.labels)[kIrony]);
  CHECK(r.sarcastic == true);
}

TEST_CASE("all-zero labels on a sarcastic row are kept") {
  const std::string content =
      "tweet,sarcastic,sarcasm,irony,satire,understatement,overstatement,"
      "rhetorical_question\nmeh,1,0,0,0,0,0,0\n";
  LoadResult res = load_csv_string(content, Language::en, "t");
  REQUIRE(res.dataset.records[0].labels.has_value());
  CHECK_FALSE(res.dataset.records[0].labels->any());
}

TEST_CASE("a rephrase implies the sarcastic class") {
  LoadResult res = load_csv_string("tweet,rephrase\nugh,calm version\n",
                                   Language::en, "t");
  CHECK(res.dataset.records[0].sarcastic == true);
}

TEST_CASE("dialect strings parse case-insensitively") {
  LoadResult res = load_csv_string("tweet,dialect\nمرحبا,Egyptian\n",
                                   Language::ar, "t");
  CHECK(res.dataset.records[0].dialect == Dialect::egyptian);
}

TEST_CASE("record JSON round-trips every field") {
  TweetRecord r;
  r.id = "x:1";
  r.text = "some text 🙂";
  r.sarcastic = true;
  r.rephrase = "plain";
  LabelVector lv;
  lv[kSarcasm] = lv[kRhetoricalQuestion] = true;
  r.labels = lv;
  r.dialect = Dialect::gulf;
  r.source = Source::augmented;
  AugmentationProvenance prov;
  prov.method = AugMethod::embedding_substitution;
  prov.parent_id = "x:0";
  prov.replaced.push_back({3, "great", "fine"});
  r.provenance = prov;
  CHECK(record_from_json(record_to_json(r)) == r);
}

TEST_CASE("record JSON omits absent fields") {
  TweetRecord r;
  r.id = "x:1";
  r.text = "hello";
  std::string j = record_to_json(r);
  CHECK(j.find("sarcastic") == std::string::npos);
  CHECK(j.find("rephrase") == std::string::npos);
  CHECK(j.find("labels") == std::string::npos);
  CHECK(record_from_json(j) == r);
}

TEST_CASE("random records survive a JSON round-trip") {
  SplitRng rng(17);
  for (int i = 0; i < 200; ++i) {
    TweetRecord r;
    r.id = "r:" + std::to_string(i);
    r.text = "word" + std::to_string(rng.below(1000));
    if (rng.below(2)) r.sarcastic = rng.below(2) == 1;
    if (r.sarcastic.value_or(false)) {
      if (rng.below(2)) r.rephrase = "re" + std::to_string(rng.below(100));
      if (rng.below(2)) {
        LabelVector lv;
        for (int l = 0; l < kNumLabels; ++l) lv[l] = rng.below(2) == 1;
        r.labels = lv;
      }
    }
    CHECK(record_from_json(record_to_json(r)) == r);
  }
}

TEST_CASE("stratified split reproduces the published 60/40 sizes") {
  // 3468 tweets at 25% sarcastic -> 2080 train / 1388 val.
  Dataset ds = make_pool({"en", Language::en, 3468, 867, false, 1});
  auto [train, val] = split_train_val(ds, {});
  CHECK(train.size() == 2080);
  CHECK(val.size() == 1388);
  std::size_t s = 0;
  for (const auto& r : train.records)
    if (r.sarcastic.value_or(false)) ++s;
  CHECK(s == 520);

  // Arabic shape: 3102 at 745 sarcastic -> 1861 / 1241.
  Dataset ar = make_pool({"ar", Language::ar, 3102, 745, false, 2});
  auto [tr2, va2] = split_train_val(ar, {});
  CHECK(tr2.size() == 1861);
  CHECK(va2.size() == 1241);
}

TEST_CASE("split is a partition preserving order") {
  Dataset ds = make_pool({"p", Language::en, 101, 37, false, 5});
  SplitSpec spec;
  spec.seed = 9;
  auto [train, val] = split_train_val(ds, spec);
  CHECK(train.size() + val.size() == ds.size());
  std::set<std::string> ids;
  for (const auto& r : train.records) ids.insert(r.id);
  for (const auto& r : val.records) CHECK(ids.insert(r.id).second);
  CHECK(ids.size() == ds.size());
  // Original relative order is preserved inside each side.
  auto ordered = [&](const Dataset& part) {
    std::size_t last = 0;
    bool first = true;
    for (const auto& r : part.records) {
      std::size_t idx = std::stoul(r.id.substr(r.id.find(':') + 1));
      if (!first && idx < last) return false;
      last = idx;
      first = false;
    }
    return true;
  };
  CHECK(ordered(train));
  CHECK(ordered(val));
}

TEST_CASE("split is seed-deterministic") {
  Dataset ds = make_pool({"p", Language::en, 200, 60, false, 3});
  SplitSpec spec;
  spec.seed = 4;
  auto [a1, b1] = split_train_val(ds, spec);
  auto [a2, b2] = split_train_val(ds, spec);
  CHECK(a1.records == a2.records);
  CHECK(b1.records == b2.records);
}

TEST_CASE("invalid split fractions are rejected") {
  Dataset ds = make_pool({"p", Language::en, 10, 3, false, 3});
  SplitSpec spec;
  spec.train_fraction = 1.0;
  CHECK_THROWS_AS(split_train_val(ds, spec), ConfigError);
  spec.train_fraction = 0.0;
  CHECK_THROWS_AS(split_train_val(ds, spec), ConfigError);
}

TEST_CASE("stats report one-decimal percentages") {
  Dataset ds = make_pool({"s", Language::en, 3468, 867, false, 7});
  StatsSummary stats = dataset_stats(ds);
  CHECK(stats.total == 3468);
  CHECK(stats.sarcastic == 867);
  CHECK(stats.sarcastic_percent == doctest::Approx(25.0));
  CHECK(stats.non_sarcastic_percent == doctest::Approx(75.0));
}

TEST_CASE("validate_record rejects schema violations") {
  TweetRecord r;
  r.id = "v:0";
  r.text = "  ";
  CHECK_THROWS_AS(validate_record(r), ValidationError);
  r.text = "ok";
  r.sarcastic = false;
  r.labels = LabelVector{};
  CHECK_THROWS_AS(validate_record(r), ValidationError);
  r.labels.reset();
  r.rephrase = "nope";
  CHECK_THROWS_AS(validate_record(r), ValidationError);
}

TEST_CASE("validate_dataset rejects duplicate ids") {
  Dataset ds;
  ds.name = "d";
  TweetRecord r;
  r.id = "dup";
  r.text = "x";
  ds.records = {r, r};
  CHECK_THROWS_AS(validate_dataset(ds), ValidationError);
}

TEST_CASE("fetch tolerates missing tweets") {
  MapTransport transport;
  transport.tweets = {{"1", "hello"}, {"3", "bye"}};
  FetchResult res =
      fetch_tweets_by_id({"1", "2", "3"}, transport, Language::en);
  CHECK(res.dataset.size() == 2);
  CHECK(res.dataset.records[0].source == Source::twitter_api);
  CHECK(res.missing == std::vector<std::string>{"2"});
}

namespace {

struct FlakyTransport : TweetTransport {
  int failures_left;
  int calls = 0;
  explicit FlakyTransport(int failures) : failures_left(failures) {}
  std::optional<std::string> get_tweet(const std::string&) override {
    ++calls;
    if (failures_left-- > 0) throw TransportUnavailable("down");
    return "text";
  }
};

}  // namespace

TEST_CASE("transient transport failures are retried with backoff") {
  FlakyTransport transport(2);
  std::vector<double> sleeps;
  FetchOptions opts;
  opts.sleep = [&](double s) { sleeps.push_back(s); };
  FetchResult res = fetch_tweets_by_id({"9"}, transport, Language::en, opts);
  CHECK(res.dataset.size() == 1);
  CHECK(transport.calls == 3);
  REQUIRE(sleeps.size() == 2);
  CHECK(sleeps[1] == doctest::Approx(2.0 * sleeps[0]));
}

TEST_CASE("persistent transport failure lists the unfetched ids") {
  FlakyTransport transport(100);
  FetchOptions opts;
  opts.sleep = [](double) {};
  try {
    fetch_tweets_by_id({"7", "8"}, transport, Language::en, opts);
    FAIL("expected IngestionError");
  } catch (const IngestionError& e) {
    std::string msg = e.what();
    CHECK(msg.find("7") != std::string::npos);
    CHECK(msg.find("8") != std::string::npos);
  }
}
