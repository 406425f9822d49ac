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

#include "sarckit/synth.hpp"

#include <string>

#include "sarckit/rng.hpp"

namespace sarckit {

namespace {

const char* const kSyllables[] = {"ka", "lo", "mi", "ta", "ره", "su", "ve",
                                  "no", "ri", "ba", "du", "fe"};
constexpr std::size_t kNumSyllables = 12;

std::string pseudo_word(SplitRng& rng) {
  std::size_t n = 2 + rng.below(3);
  std::string w;
  for (std::size_t i = 0; i < n; ++i)
    w += kSyllables[rng.below(kNumSyllables)];
  return w;
}

std::string pseudo_text(SplitRng& rng, std::size_t min_words,
                        std::size_t max_words) {
  std::size_t n = min_words + rng.below(max_words - min_words + 1);
  std::string t;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) t += ' ';
    t += pseudo_word(rng);
  }
  return t;
}

const char* const kMarkers[] = {"zorp", "quib", "flimz"};

Dataset build_pool(const PoolSpec& spec, bool separable) {
  if (spec.sarcastic > spec.total)
    throw ConfigError("make_pool: sarcastic count exceeds total");
  Dataset ds;
  ds.name = spec.name;
  ds.language = spec.language;
  ds.records.reserve(spec.total);
  SplitRng root(spec.seed);
  for (std::size_t i = 0; i < spec.total; ++i) {
    auto rng = root.fork("rec:" + std::to_string(i));
    bool sarcastic = i < spec.sarcastic;
    TweetRecord r;
    r.id = spec.name + ":" + std::to_string(i);
    r.text = pseudo_text(rng, 5, 12);
    r.sarcastic = sarcastic;
    r.source = Source::original;
    if (sarcastic && separable) {
      // Insert a marker token at a random position.
      std::string marker = kMarkers[rng.below(3)];
      r.text = marker + " " + r.text;
    }
    if (sarcastic && spec.with_rephrase) r.rephrase = pseudo_text(rng, 5, 12);
    ds.records.push_back(std::move(r));
  }
  return ds;
}

}  // namespace

Dataset make_pool(const PoolSpec& spec) { return build_pool(spec, false); }

Dataset make_separable_pool(const PoolSpec& spec) {
  return build_pool(spec, true);
}

Dataset make_labeled_pool(const std::string& name, Language language,
                          const std::array<std::size_t, kNumLabels>& counts,
                          std::uint64_t seed) {
  Dataset ds;
  ds.name = name;
  ds.language = language;
  SplitRng root(seed);
  std::size_t n = 0;
  for (int l = 0; l < kNumLabels; ++l) {
    for (std::size_t i = 0; i < counts[static_cast<std::size_t>(l)]; ++i) {
      auto rng = root.fork("rec:" + std::to_string(n));
      TweetRecord r;
      r.id = name + ":" + std::to_string(n++);
      r.text = pseudo_text(rng, 5, 12);
      r.sarcastic = true;
      LabelVector lv;
      lv[l] = true;
      r.labels = lv;
      r.source = Source::original;
      ds.records.push_back(std::move(r));
    }
  }
  return ds;
}

}  // namespace sarckit
