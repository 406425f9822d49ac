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

#ifndef SARCKIT_AUGMENT_HPP
#define SARCKIT_AUGMENT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "sarckit/embed.hpp"
#include "sarckit/types.hpp"

namespace sarckit {

// Recipe for the B0..B_{steps-1} class-bias family: every sarcastic pool is
// merged in whole, then k * increment non-sarcastic tweets are added per step.
struct BiasSchedule {
  Dataset base_pool;                    // original train split
  std::vector<Dataset> sarcastic_pools; // sarcastic-only external pools
  Dataset ns_pool;                      // non-sarcastic-only external pool
  int increment = 145;                  // 145 (En) / 202 (Ar)
  int steps = 10;
  std::uint64_t seed = 0;
};

// Builds B0..B_{steps-1}. The non-sarcastic pool is shuffled once with the
// schedule seed, so the id set of B_k is a subset of B_{k+1}'s and
// |B_{k+1}| - |B_k| = increment exactly. Each output is itself shuffled.
// Throws ScheduleError naming the step when the pool runs out.
std::vector<Dataset> build_bias_schedule(const BiasSchedule& spec);

struct SubstitutionOptions {
  // Copies generated per source record; ignored when target_total is set.
  int copies_per_record = 1;
  // When set, generation cycles round-robin over eligible records until the
  // output dataset reaches this size (how a fixed 606 -> 1606 growth
  // is expressed).
  std::optional<std::size_t> target_total;
  std::uint64_t seed = 0;
  bool also_rephrase = false;
  // Tokens in this set are never replaced; optional.
  const std::unordered_set<std::string>* stopwords = nullptr;
};

struct SubstitutionResult {
  Dataset dataset;              // source records plus generated copies
  std::size_t skipped = 0;      // records with zero eligible keywords
  std::size_t generated = 0;
};

// Copies records with 1..4 eligible keywords replaced, each by a uniformly
// chosen member of the word's top-3 cosine neighbors. A record with no
// eligible keyword is skipped and counted, never copied unmodified.
SubstitutionResult embedding_substitute(const Dataset& ds,
                                        const EmbeddingTable& table,
                                        const SubstitutionOptions& opts);

// A token is eligible for substitution when it is in-vocabulary, not a
// stopword, not HTTPURL/@USER, not a hashtag or mention, and has >= 3
// codepoints.
bool substitution_eligible(const std::string& token, const EmbeddingTable& table,
                           const std::unordered_set<std::string>* stopwords);

enum class BalanceKey { sarcastic_class, labels };

struct RepetitionOptions {
  BalanceKey key = BalanceKey::sarcastic_class;
  std::uint64_t seed = 0;
  // Per-label target for key=labels. Default: the maximum pre-balance label
  // count (duplicate-to-max). When sizing a repetition dataset to match an
  // embedding-balanced counterpart, set target_total and the per-label
  // targets become an even split of it.
  std::optional<std::size_t> target_total;
};

// Oversamples minority classes/labels by duplicating seeded-random records;
// duplicates carry repetition provenance. Throws BalanceError when a
// balanced label has zero instances.
Dataset balance_by_repetition(const Dataset& ds, const RepetitionOptions& opts);

struct HeuristicTargets {
  // Indexed by LabelId; the sarcasm slot holds its (untouched) pre-count.
  std::array<std::size_t, kNumLabels> targets{};
};

// Per-label repetition ceilings from the sarcasm count s and each label's
// own pre-balance count c:
//   irony                s*(1 + 1.0/sqrt(c))
//   satire               s*(1 + 2.0/sqrt(c))
//   understatement       s*(1 + 3.0/sqrt(c))
//   overstatement        s*(1 + 1.5/sqrt(c))
//   rhetorical question  s*(1 + 1.2/sqrt(c))
// rounded to nearest, clamped below by the pre-count. Zero pre-counts are a
// ConfigError (the formula divides by sqrt of the count).
HeuristicTargets heuristic_targets(const std::array<std::size_t, kNumLabels>& counts,
                                   std::size_t sarcasm_count);

// Duplicates records per label until each label reaches its target; labels
// processed in fixed order with sarcasm last and untouched. Multi-label
// duplicates may overshoot later targets; accepted and visible in stats.
Dataset balance_by_heuristic(const Dataset& ds, const HeuristicTargets& targets,
                             std::uint64_t seed);

// Subtask-C pair construction: every record must carry a rephrase. Exactly
// ceil(n/2) seeded-randomly chosen pairs are swapped (rephrase first,
// label 1); output order is seeded-shuffled.
PairDataset pair_swap_half(const Dataset& ds, std::uint64_t seed);

std::array<std::size_t, kNumLabels> label_counts(const Dataset& ds);

}  // namespace sarckit

#endif  // SARCKIT_AUGMENT_HPP
