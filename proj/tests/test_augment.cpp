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

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "sarckit/augment.hpp"
#include "sarckit/corpus.hpp"
#include "sarckit/rng.hpp"
#include "sarckit/synth.hpp"

using namespace sarckit;

namespace {

BiasSchedule en_schedule() {
  BiasSchedule spec;
  Dataset full = make_pool({"iSar", Language::en, 3468, 867, false, 1});
  spec.base_pool = split_train_val(full, {}).first;  // 2080, 520 sarcastic
  spec.sarcastic_pools = {
      make_pool({"extA", Language::en, 477, 477, false, 2}),
      make_pool({"extB", Language::en, 120, 120, false, 3}),
      make_pool({"extC", Language::en, 1911, 1911, false, 4})};
  spec.ns_pool = make_pool({"news", Language::en, 1600, 0, false, 5});
  spec.increment = 145;
  spec.steps = 10;
  spec.seed = 11;
  return spec;
}

std::set<std::string> id_set(const Dataset& ds) {
  std::set<std::string> ids;
  for (const auto& r : ds.records) ids.insert(r.id);
  return ids;
}

std::size_t sarcastic_count(const Dataset& ds) {
  std::size_t s = 0;
  for (const auto& r : ds.records)
    if (r.sarcastic.value_or(false)) ++s;
  return s;
}

std::vector<std::string> tokens_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

TEST_CASE("bias schedule reproduces the published dataset sizes") {
  auto steps = build_bias_schedule(en_schedule());
  REQUIRE(steps.size() == 10);
  for (int k = 0; k < 10; ++k) {
    CHECK(steps[k].size() == 4588 + 145 * static_cast<std::size_t>(k));
    CHECK(sarcastic_count(steps[k]) == 3028);
  }
  // Sarcastic share falls from 66% toward 51%.
  CHECK(3028.0 / 4588.0 == doctest::Approx(0.66).epsilon(0.005));
  CHECK(3028.0 / 5893.0 == doctest::Approx(0.514).epsilon(0.005));
}

TEST_CASE("bias schedule steps are nested by id") {
  auto steps = build_bias_schedule(en_schedule());
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    auto a = id_set(steps[k]);
    auto b = id_set(steps[k + 1]);
    CHECK(a.size() == steps[k].size());  // no duplicate ids
    CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    CHECK(b.size() - a.size() == 145);
  }
}

TEST_CASE("bias schedule is seed-deterministic and seed-sensitive") {
  BiasSchedule spec = en_schedule();
  auto s1 = build_bias_schedule(spec);
  auto s2 = build_bias_schedule(spec);
  for (std::size_t k = 0; k < s1.size(); ++k)
    CHECK(s1[k].records == s2[k].records);
  spec.seed = 12;
  auto s3 = build_bias_schedule(spec);
  CHECK(s1[9].records != s3[9].records);
  // Different seeds draw a different non-sarcastic subset.
  CHECK(id_set(s1[9]) != id_set(s3[9]));
}

TEST_CASE("an exhausted non-sarcastic pool names the failing step") {
  BiasSchedule spec = en_schedule();
  spec.ns_pool = make_pool({"news", Language::en, 800, 0, false, 5});
  try {
    build_bias_schedule(spec);
    FAIL("expected ScheduleError");
  } catch (const ScheduleError& e) {
    // 800 / 145 = 5 full steps; step index 6 is the first to fail.
    CHECK(std::string(e.what()).find("6") != std::string::npos);
  }
}

TEST_CASE("impure pools are rejected with the offending id") {
  BiasSchedule spec = en_schedule();
  spec.sarcastic_pools[0].records[3].sarcastic = false;
  const std::string bad_id = spec.sarcastic_pools[0].records[3].id;
  try {
    build_bias_schedule(spec);
    FAIL("expected ScheduleError");
  } catch (const ScheduleError& e) {
    CHECK(std::string(e.what()).find(bad_id) != std::string::npos);
  }
  BiasSchedule spec2 = en_schedule();
  spec2.ns_pool.records[0].sarcastic = true;
  CHECK_THROWS_AS(build_bias_schedule(spec2), ScheduleError);
}

namespace {

EmbeddingTable toy_table() {
  EmbeddingTable t;
  // Clustered 3-d vectors so each word has obvious neighbors.
  auto add = [&](const std::string& w, double a, double b, double c) {
    Eigen::VectorXd v(3);
    v << a, b, c;
    t.add(w, v);
  };
  add("alpha", 1.0, 0.0, 0.0);
  add("alfa", 0.99, 0.05, 0.0);
  add("alef", 0.98, 0.0, 0.05);
  add("aleph", 0.97, 0.03, 0.03);
  add("beta", 0.0, 1.0, 0.0);
  add("betta", 0.0, 0.99, 0.05);
  add("bet", 0.05, 0.98, 0.0);
  add("betah", 0.03, 0.97, 0.03);
  add("gamma", 0.0, 0.0, 1.0);
  add("gamm", 0.05, 0.0, 0.99);
  add("gama", 0.0, 0.05, 0.98);
  add("gammah", 0.03, 0.03, 0.97);
  return t;
}

Dataset sub_input() {
  Dataset ds;
  ds.name = "sub";
  ds.language = Language::en;
  auto rec = [&](const std::string& id, const std::string& text) {
    TweetRecord r;
    r.id = id;
    r.text = text;
    r.sarcastic = true;
    ds.records.push_back(r);
  };
  rec("s:0", "alpha beta gamma alpha");
  rec("s:1", "beta gamma alpha beta gamma");
  rec("s:2", "@USER HTTPURL ok");  // nothing eligible
  return ds;
}

}  // namespace

TEST_CASE("substitution copies replace 1..4 top-3 neighbors") {
  EmbeddingTable table = toy_table();
  SubstitutionOptions opts;
  opts.copies_per_record = 4;
  opts.seed = 3;
  SubstitutionResult res = embedding_substitute(sub_input(), table, opts);
  CHECK(res.skipped == 1);
  CHECK(res.generated == 8);  // two eligible records, four copies each
  CHECK(res.dataset.size() == 3 + 8);

  std::map<std::string, TweetRecord> by_id;
  for (const auto& r : sub_input().records) by_id[r.id] = r;
  for (const auto& r : res.dataset.records) {
    if (!r.provenance.has_value()) continue;
    const auto& prov = *r.provenance;
    CHECK(prov.method == AugMethod::embedding_substitution);
    REQUIRE(by_id.count(prov.parent_id) == 1);
    CHECK(r.id.find(prov.parent_id + "#sub") == 0);
    const TweetRecord& parent = by_id[prov.parent_id];
    auto src = tokens_of(parent.text);
    auto dst = tokens_of(r.text);
    REQUIRE(src.size() == dst.size());
    REQUIRE(prov.replaced.size() >= 1);
    CHECK(prov.replaced.size() <= 4);
    std::set<int> touched;
    for (const auto& rep : prov.replaced) {
      touched.insert(rep.position);
      CHECK(src[static_cast<std::size_t>(rep.position)] == rep.original);
      CHECK(dst[static_cast<std::size_t>(rep.position)] == rep.substitute);
      // The substitute is one of the original's three nearest neighbors.
      auto top = table.top_k_similar(rep.original, 3);
      bool found = false;
      for (const auto& sw : top) found |= sw.word == rep.substitute;
      CHECK(found);
    }
    CHECK(touched.size() == prov.replaced.size());
    for (std::size_t i = 0; i < src.size(); ++i)
      if (!touched.count(static_cast<int>(i))) CHECK(src[i] == dst[i]);
  }
}

TEST_CASE("substitution honors a target_total") {
  EmbeddingTable table = toy_table();
  SubstitutionOptions opts;
  opts.target_total = 13;
  opts.seed = 8;
  SubstitutionResult res = embedding_substitute(sub_input(), table, opts);
  CHECK(res.dataset.size() == 13);
  CHECK(res.generated == 10);
}

TEST_CASE("substitution is deterministic in the seed") {
  EmbeddingTable table = toy_table();
  SubstitutionOptions opts;
  opts.copies_per_record = 2;
  opts.seed = 21;
  auto a = embedding_substitute(sub_input(), table, opts);
  auto b = embedding_substitute(sub_input(), table, opts);
  CHECK(a.dataset.records == b.dataset.records);
}

TEST_CASE("eligibility excludes placeholders, stopwords and short or OOV words") {
  EmbeddingTable table = toy_table();
  std::unordered_set<std::string> stop = {"beta"};
  CHECK(substitution_eligible("alpha", table, &stop));
  CHECK_FALSE(substitution_eligible("beta", table, &stop));
  CHECK(substitution_eligible("beta", table, nullptr));
  CHECK_FALSE(substitution_eligible("HTTPURL", table, nullptr));
  CHECK_FALSE(substitution_eligible("@USER", table, nullptr));
  CHECK_FALSE(substitution_eligible("#alpha", table, nullptr));
  CHECK_FALSE(substitution_eligible("@alpha", table, nullptr));
  CHECK(substitution_eligible("bet", table, nullptr));  // exactly 3 codepoints
  CHECK_FALSE(substitution_eligible("be", table, nullptr));
  CHECK_FALSE(substitution_eligible("missing", table, nullptr));
}

TEST_CASE("heuristic targets match the published worked example") {
  // s = 672 with per-label pre-counts 268/77/14/66/106.
  std::array<std::size_t, kNumLabels> counts = {672, 268, 77, 14, 66, 106};
  HeuristicTargets t = heuristic_targets(counts, 672);
  CHECK(t.targets[kSarcasm] == 672);
  CHECK(t.targets[kIrony] == 713);
  CHECK(t.targets[kSatire] == 825);
  CHECK(t.targets[kUnderstatement] == 1211);
  CHECK(t.targets[kOverstatement] == 796);
  CHECK(t.targets[kRhetoricalQuestion] == 750);
}

TEST_CASE("heuristic targets match an independent oracle on random tuples") {
  const double coeff[kNumLabels] = {0.0, 1.0, 2.0, 3.0, 1.5, 1.2};
  SplitRng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<std::size_t, kNumLabels> counts{};
    std::size_t s = 50 + rng.below(2000);
    counts[kSarcasm] = s;
    for (int l = 1; l < kNumLabels; ++l) counts[l] = 1 + rng.below(1500);
    HeuristicTargets t = heuristic_targets(counts, s);
    CHECK(t.targets[kSarcasm] == s);
    for (int l = 1; l < kNumLabels; ++l) {
      double raw = static_cast<double>(s) *
                   (1.0 + coeff[l] / std::sqrt(static_cast<double>(counts[l])));
      auto want = static_cast<std::size_t>(std::llround(raw));
      if (want < counts[l]) want = counts[l];
      CHECK(t.targets[l] == want);
    }
  }
}

TEST_CASE("heuristic targets reject zero pre-counts") {
  std::array<std::size_t, kNumLabels> counts = {10, 5, 0, 3, 3, 3};
  CHECK_THROWS_AS(heuristic_targets(counts, 10), ConfigError);
}

TEST_CASE("heuristic balancing reaches every target") {
  std::array<std::size_t, kNumLabels> counts = {0, 40, 12, 5, 9, 20};
  Dataset ds = make_labeled_pool("hb", Language::en, counts, 6);
  auto pre = label_counts(ds);
  HeuristicTargets targets = heuristic_targets(pre, pre[kSarcasm]);
  Dataset out = balance_by_heuristic(ds, targets, 7);
  auto post = label_counts(out);
  for (int l = 1; l < kNumLabels; ++l) CHECK(post[l] >= targets.targets[l]);
  // Single-label records cannot overshoot, so counts land exactly.
  for (int l = 1; l < kNumLabels; ++l) CHECK(post[l] == targets.targets[l]);
  for (const auto& r : out.records)
    if (r.provenance.has_value())
      CHECK(r.provenance->method == AugMethod::repetition);
}

TEST_CASE("class repetition balances to the majority count") {
  Dataset ds = make_pool({"cb", Language::en, 100, 30, false, 9});
  RepetitionOptions opts;
  opts.key = BalanceKey::sarcastic_class;
  opts.seed = 2;
  Dataset out = balance_by_repetition(ds, opts);
  CHECK(out.size() == 140);
  CHECK(sarcastic_count(out) == 70);
  std::size_t dups = 0;
  for (const auto& r : out.records)
    if (r.provenance.has_value()) {
      ++dups;
      CHECK(r.id.find("#rep") != std::string::npos);
      CHECK(r.sarcastic == true);
    }
  CHECK(dups == 40);
}

TEST_CASE("label repetition with a target_total yields even shares") {
  std::array<std::size_t, kNumLabels> counts = {672, 268, 77, 14, 66, 106};
  Dataset ds = make_labeled_pool("rb", Language::en, counts, 4);
  RepetitionOptions opts;
  opts.key = BalanceKey::labels;
  opts.seed = 1;
  opts.target_total = 4336;
  Dataset out = balance_by_repetition(ds, opts);
  CHECK(out.size() == 4336);
  auto post = label_counts(out);
  std::multiset<std::size_t> got(post.begin(), post.end());
  CHECK(got == std::multiset<std::size_t>{722, 722, 723, 723, 723, 723});
}

TEST_CASE("a zero-instance label cannot be balanced") {
  std::array<std::size_t, kNumLabels> counts = {5, 5, 0, 5, 5, 5};
  Dataset ds = make_labeled_pool("zb", Language::en, counts, 4);
  RepetitionOptions opts;
  opts.key = BalanceKey::labels;
  try {
    balance_by_repetition(ds, opts);
    FAIL("expected BalanceError");
  } catch (const BalanceError& e) {
    CHECK(std::string(e.what()).find(label_name(kSatire)) != std::string::npos);
  }
}

TEST_CASE("repetition is deterministic in the seed") {
  Dataset ds = make_pool({"d", Language::en, 80, 20, false, 31});
  RepetitionOptions opts;
  opts.seed = 5;
  auto a = balance_by_repetition(ds, opts);
  auto b = balance_by_repetition(ds, opts);
  CHECK(a.records == b.records);
}

TEST_CASE("pair swapping flips exactly half, rounded up") {
  for (std::size_t n = 1; n <= 20; ++n) {
    Dataset ds = make_pool({"pairs", Language::en, n, n, true, 100 + n});
    PairDataset pairs = pair_swap_half(ds, 77);
    REQUIRE(pairs.size() == n);
    std::map<std::string, TweetRecord> by_id;
    for (const auto& r : ds.records) by_id[r.id] = r;
    std::size_t swapped = 0;
    std::set<std::string> seen;
    for (const auto& p : pairs.records) {
      // Recover the source record from either side.
      const TweetRecord* src = nullptr;
      for (const auto& [id, r] : by_id)
        if (r.text == p.text_a || r.text == p.text_b) src = &r;
      REQUIRE(src != nullptr);
      CHECK(seen.insert(src->id).second);
      if (p.label == 1) {
        ++swapped;
        CHECK(p.text_a == src->rephrase.value());
        CHECK(p.text_b == src->text);
      } else {
        CHECK(p.label == 0);
        CHECK(p.text_a == src->text);
        CHECK(p.text_b == src->rephrase.value());
      }
    }
    CHECK(seen.size() == n);  // every source used exactly once
    CHECK(swapped == (n + 1) / 2);
  }
}

TEST_CASE("pair swapping is deterministic and demands rephrases") {
  Dataset ds = make_pool({"pd", Language::en, 9, 9, true, 13});
  auto a = pair_swap_half(ds, 4);
  auto b = pair_swap_half(ds, 4);
  CHECK(a.records == b.records);
  auto c = pair_swap_half(ds, 5);
  CHECK(a.records != c.records);

  ds.records[4].rephrase.reset();
  try {
    pair_swap_half(ds, 4);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find(ds.records[4].id) != std::string::npos);
  }
}

TEST_CASE("label_counts tallies multi-label records") {
  Dataset ds;
  ds.name = "lc";
  TweetRecord r;
  r.id = "a";
  r.text = "x";
  r.sarcastic = true;
  LabelVector lv;
  lv[kIrony] = lv[kSatire] = true;
  r.labels = lv;
  ds.records = {r, r};
  ds.records[1].id = "b";
  auto counts = label_counts(ds);
  CHECK(counts[kIrony] == 2);
  CHECK(counts[kSatire] == 2);
  CHECK(counts[kSarcasm] == 0);
}
