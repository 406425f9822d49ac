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

#include "sarckit/augment.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sarckit/preprocess.hpp"
#include "sarckit/rng.hpp"

namespace sarckit {

namespace {

std::vector<std::string> split_ws(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string join_ws(const std::vector<std::string>& toks) {
  std::string out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i) out += ' ';
    out += toks[i];
  }
  return out;
}

}  // namespace

std::array<std::size_t, kNumLabels> label_counts(const Dataset& ds) {
  std::array<std::size_t, kNumLabels> counts{};
  for (const auto& r : ds.records) {
    if (!r.labels) continue;
    for (int l = 0; l < kNumLabels; ++l)
      if ((*r.labels)[l]) ++counts[static_cast<std::size_t>(l)];
  }
  return counts;
}

std::vector<Dataset> build_bias_schedule(const BiasSchedule& spec) {
  if (spec.steps < 1) throw ConfigError("bias schedule needs at least one step");
  if (spec.increment < 1) throw ConfigError("bias schedule increment must be positive");
  for (const auto& pool : spec.sarcastic_pools)
    for (const auto& r : pool.records)
      if (!r.sarcastic.value_or(false))
        throw ScheduleError("sarcastic pool '" + pool.name +
                            "' contains non-sarcastic record " + r.id);
  for (const auto& r : spec.ns_pool.records)
    if (r.sarcastic.value_or(false))
      throw ScheduleError("non-sarcastic pool '" + spec.ns_pool.name +
                          "' contains sarcastic record " + r.id);

  SplitRng root(spec.seed);
  std::vector<TweetRecord> ns = spec.ns_pool.records;
  {
    auto rng = root.fork("ns_order");
    rng.shuffle(ns);
  }

  std::vector<TweetRecord> fixed = spec.base_pool.records;
  for (const auto& pool : spec.sarcastic_pools)
    fixed.insert(fixed.end(), pool.records.begin(), pool.records.end());

  std::vector<Dataset> out;
  out.reserve(static_cast<std::size_t>(spec.steps));
  for (int k = 0; k < spec.steps; ++k) {
    std::size_t need = static_cast<std::size_t>(k) *
                       static_cast<std::size_t>(spec.increment);
    if (need > ns.size())
      throw ScheduleError("non-sarcastic pool exhausted at step " +
                          std::to_string(k) + ": need " + std::to_string(need) +
                          ", have " + std::to_string(ns.size()));
    Dataset step;
    step.name = "B" + std::to_string(k);
    step.language = spec.base_pool.language;
    step.records = fixed;
    step.records.insert(step.records.end(), ns.begin(),
                        ns.begin() + static_cast<std::ptrdiff_t>(need));
    auto rng = root.fork("shuffle:" + std::to_string(k));
    rng.shuffle(step.records);
    out.push_back(std::move(step));
  }
  return out;
}

bool substitution_eligible(const std::string& token, const EmbeddingTable& table,
                           const std::unordered_set<std::string>* stopwords) {
  if (token.empty()) return false;
  if (token == "HTTPURL" || token == "@USER") return false;
  if (token[0] == '#' || token[0] == '@') return false;
  if (utf8::length(token) < 3) return false;
  if (stopwords != nullptr && stopwords->count(token)) return false;
  return table.contains(token);
}

namespace {

// One substituted copy of r, or nullopt when nothing is eligible.
std::optional<TweetRecord> make_substituted_copy(
    const TweetRecord& r, const EmbeddingTable& table,
    const SubstitutionOptions& opts, SplitRng& rng, std::size_t copy_index) {
  std::vector<std::string> toks = split_ws(r.text);
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < toks.size(); ++i)
    if (substitution_eligible(toks[i], table, opts.stopwords))
      eligible.push_back(i);
  if (eligible.empty()) return std::nullopt;

  std::size_t max_subs = std::min<std::size_t>(4, eligible.size());
  std::size_t n_subs = 1 + rng.below(max_subs);
  rng.shuffle(eligible);
  std::vector<std::size_t> chosen(eligible.begin(),
                                  eligible.begin() +
                                      static_cast<std::ptrdiff_t>(n_subs));
  std::sort(chosen.begin(), chosen.end());

  TweetRecord copy = r;
  copy.id = r.id + "#sub" + std::to_string(copy_index);
  copy.source = Source::augmented;
  AugmentationProvenance prov;
  prov.method = AugMethod::embedding_substitution;
  prov.parent_id = r.id;
  for (std::size_t pos : chosen) {
    auto neighbors = table.top_k_similar(toks[pos], 3);
    if (neighbors.empty()) continue;
    const std::string& sub =
        neighbors[rng.below(neighbors.size())].word;
    prov.replaced.push_back(
        {static_cast<int>(pos), toks[pos], sub});
    toks[pos] = sub;
  }
  if (prov.replaced.empty()) return std::nullopt;
  copy.text = join_ws(toks);
  if (opts.also_rephrase && r.rephrase) {
    std::vector<std::string> rtoks = split_ws(*r.rephrase);
    for (auto& tok : rtoks) {
      if (!substitution_eligible(tok, table, opts.stopwords)) continue;
      auto neighbors = table.top_k_similar(tok, 3);
      if (neighbors.empty()) continue;
      if (rng.below(2) == 0) tok = neighbors[rng.below(neighbors.size())].word;
    }
    copy.rephrase = join_ws(rtoks);
  }
  copy.provenance = std::move(prov);
  return copy;
}

}  // namespace

SubstitutionResult embedding_substitute(const Dataset& ds,
                                        const EmbeddingTable& table,
                                        const SubstitutionOptions& opts) {
  if (!opts.target_total && opts.copies_per_record < 0)
    throw ConfigError("copies_per_record must be >= 0");
  if (opts.target_total && *opts.target_total < ds.size())
    throw ConfigError("substitution target_total smaller than the source dataset");

  SubstitutionResult res;
  res.dataset.name = ds.name + "-embsub";
  res.dataset.language = ds.language;
  res.dataset.records = ds.records;

  SplitRng root(opts.seed);
  // Which records can produce copies at all; failures are counted once.
  std::vector<std::size_t> producers;
  for (std::size_t i = 0; i < ds.records.size(); ++i) {
    std::vector<std::string> toks = split_ws(ds.records[i].text);
    bool ok = std::any_of(toks.begin(), toks.end(), [&](const std::string& t) {
      return substitution_eligible(t, table, opts.stopwords);
    });
    if (ok)
      producers.push_back(i);
    else
      ++res.skipped;
  }

  auto emit = [&](std::size_t rec_index, std::size_t copy_index) {
    const TweetRecord& r = ds.records[rec_index];
    auto rng = root.fork("sub:" + r.id + ":" + std::to_string(copy_index));
    auto copy = make_substituted_copy(r, table, opts, rng, copy_index);
    if (!copy) return false;
    res.dataset.records.push_back(std::move(*copy));
    ++res.generated;
    return true;
  };

  if (opts.target_total) {
    if (producers.empty() && *opts.target_total > ds.size())
      throw ScheduleError(
          "no record in '" + ds.name +
          "' has an eligible keyword; cannot reach target_total");
    std::size_t copy_round = 0;
    while (res.dataset.size() < *opts.target_total) {
      bool any = false;
      for (std::size_t idx : producers) {
        if (res.dataset.size() >= *opts.target_total) break;
        any = emit(idx, copy_round) || any;
      }
      if (!any)
        throw ScheduleError("substitution stalled before reaching target_total");
      ++copy_round;
    }
  } else {
    for (int c = 0; c < opts.copies_per_record; ++c)
      for (std::size_t idx : producers)
        emit(idx, static_cast<std::size_t>(c));
  }
  return res;
}

HeuristicTargets heuristic_targets(const std::array<std::size_t, kNumLabels>& counts,
                                   std::size_t sarcasm_count) {
  static const double kCoeff[kNumLabels] = {0.0, 1.0, 2.0, 3.0, 1.5, 1.2};
  HeuristicTargets t;
  t.targets[kSarcasm] = sarcasm_count;
  double s = static_cast<double>(sarcasm_count);
  for (int l = kIrony; l < kNumLabels; ++l) {
    std::size_t c = counts[static_cast<std::size_t>(l)];
    if (c == 0)
      throw ConfigError(std::string("heuristic_targets: label '") +
                        label_name(l) + "' has zero instances");
    double raw = s * (1.0 + kCoeff[l] / std::sqrt(static_cast<double>(c)));
    auto target = static_cast<std::size_t>(std::llround(raw));
    t.targets[static_cast<std::size_t>(l)] = std::max(target, c);
  }
  return t;
}

namespace {

TweetRecord repetition_copy(const TweetRecord& r, std::size_t n) {
  TweetRecord copy = r;
  copy.id = r.id + "#rep" + std::to_string(n);
  copy.source = Source::augmented;
  AugmentationProvenance prov;
  prov.method = AugMethod::repetition;
  prov.parent_id = r.id;
  copy.provenance = std::move(prov);
  return copy;
}

}  // namespace

Dataset balance_by_repetition(const Dataset& ds, const RepetitionOptions& opts) {
  Dataset out;
  out.name = ds.name + "-balanced";
  out.language = ds.language;
  out.records = ds.records;
  SplitRng root(opts.seed);
  std::size_t rep_no = 0;

  if (opts.key == BalanceKey::sarcastic_class) {
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < ds.records.size(); ++i)
      (ds.records[i].sarcastic.value_or(false) ? pos : neg).push_back(i);
    if (pos.empty() || neg.empty())
      throw BalanceError("balance_by_repetition: class '" +
                         std::string(pos.empty() ? "sarcastic" : "non-sarcastic") +
                         "' has zero instances");
    std::size_t target = std::max(pos.size(), neg.size());
    if (opts.target_total) {
      if (*opts.target_total < 2 * target)
        throw BalanceError("balance_by_repetition: target_total " +
                           std::to_string(*opts.target_total) +
                           " is below the duplicate-to-max total " +
                           std::to_string(2 * target));
      target = *opts.target_total / 2;
    }
    auto rng = root.fork("class");
    auto fill = [&](const std::vector<std::size_t>& stratum) {
      for (std::size_t have = stratum.size(); have < target; ++have) {
        std::size_t pick = stratum[rng.below(stratum.size())];
        out.records.push_back(repetition_copy(ds.records[pick], rep_no++));
      }
    };
    fill(pos);
    fill(neg);
    return out;
  }

  // key = labels: per-label duplicate-to-target. Counts are tracked against
  // the growing output so multi-label duplicates count toward every label
  // they carry.
  std::array<std::size_t, kNumLabels> counts = label_counts(ds);
  std::array<std::size_t, kNumLabels> targets{};
  std::size_t max_count = *std::max_element(counts.begin(), counts.end());
  if (opts.target_total) {
    std::size_t base = *opts.target_total / kNumLabels;
    std::size_t extra = *opts.target_total % kNumLabels;
    for (std::size_t l = 0; l < kNumLabels; ++l)
      targets[l] = base + (l < extra ? 1 : 0);
  } else {
    targets.fill(max_count);
  }
  for (int l = 0; l < kNumLabels; ++l) {
    auto li = static_cast<std::size_t>(l);
    if (counts[li] == 0 && targets[li] > 0)
      throw BalanceError(std::string("balance_by_repetition: label '") +
                         label_name(l) + "' has zero instances");
  }
  auto rng = root.fork("labels");
  for (int l = 0; l < kNumLabels; ++l) {
    auto li = static_cast<std::size_t>(l);
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < ds.records.size(); ++i)
      if (ds.records[i].labels && (*ds.records[i].labels)[l]) pool.push_back(i);
    while (counts[li] < targets[li]) {
      std::size_t pick = pool[rng.below(pool.size())];
      const TweetRecord& src = ds.records[pick];
      out.records.push_back(repetition_copy(src, rep_no++));
      for (int m = 0; m < kNumLabels; ++m)
        if ((*src.labels)[m]) ++counts[static_cast<std::size_t>(m)];
    }
  }
  return out;
}

Dataset balance_by_heuristic(const Dataset& ds, const HeuristicTargets& targets,
                             std::uint64_t seed) {
  Dataset out;
  out.name = ds.name + "-heuristic";
  out.language = ds.language;
  out.records = ds.records;
  std::array<std::size_t, kNumLabels> counts = label_counts(ds);
  SplitRng root(seed);
  auto rng = root.fork("heuristic");
  std::size_t rep_no = 0;
  // Sarcasm is the majority anchor and is never duplicated.
  for (int l = kIrony; l < kNumLabels; ++l) {
    auto li = static_cast<std::size_t>(l);
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < ds.records.size(); ++i)
      if (ds.records[i].labels && (*ds.records[i].labels)[l]) pool.push_back(i);
    if (pool.empty() && counts[li] < targets.targets[li])
      throw BalanceError(std::string("balance_by_heuristic: label '") +
                         label_name(l) + "' has zero instances");
    while (counts[li] < targets.targets[li]) {
      std::size_t pick = pool[rng.below(pool.size())];
      const TweetRecord& src = ds.records[pick];
      out.records.push_back(repetition_copy(src, rep_no++));
      for (int m = 0; m < kNumLabels; ++m)
        if ((*src.labels)[m]) ++counts[static_cast<std::size_t>(m)];
    }
  }
  return out;
}

PairDataset pair_swap_half(const Dataset& ds, std::uint64_t seed) {
  PairDataset out;
  out.name = ds.name + "-pairs";
  out.language = ds.language;
  out.records.reserve(ds.size());
  for (const auto& r : ds.records)
    if (!r.rephrase)
      throw ValidationError("pair_swap_half: record " + r.id +
                            " has no rephrase");

  std::size_t n = ds.size();
  std::size_t n_swapped = (n + 1) / 2;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  SplitRng root(seed);
  {
    auto rng = root.fork("swap_mask");
    rng.shuffle(order);
  }
  std::vector<bool> swap_mask(n, false);
  for (std::size_t i = 0; i < n_swapped; ++i) swap_mask[order[i]] = true;

  for (std::size_t i = 0; i < n; ++i) {
    const TweetRecord& r = ds.records[i];
    PairRecord p;
    p.id = r.id + ":pair";
    if (swap_mask[i]) {
      p.text_a = *r.rephrase;
      p.text_b = r.text;
      p.label = 1;
    } else {
      p.text_a = r.text;
      p.text_b = *r.rephrase;
      p.label = 0;
    }
    out.records.push_back(std::move(p));
  }
  auto rng = root.fork("pair_order");
  rng.shuffle(out.records);
  return out;
}

}  // namespace sarckit
