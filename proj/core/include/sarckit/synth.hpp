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

#ifndef SARCKIT_SYNTH_HPP
#define SARCKIT_SYNTH_HPP

#include <array>
#include <cstdint>
#include <string>

#include "sarckit/types.hpp"

namespace sarckit {

// Deterministic synthetic corpora for desk-scale experiments: the published
// pool sizes are reproduced exactly while texts are generated.

struct PoolSpec {
  std::string name = "pool";
  Language language = Language::en;
  std::size_t total = 0;
  std::size_t sarcastic = 0;
  bool with_rephrase = false;  // sarcastic records get a rephrase
  std::uint64_t seed = 0;
};

// Random-text pool with exactly `sarcastic` positive records. Texts are
// 5..12 pseudo-words; rephrases (when requested) drop the sarcasm markers.
Dataset make_pool(const PoolSpec& spec);

// Pool whose sarcastic records are separable from the rest by surface
// tokens (positives carry one of a small marker set), so that a desk-scale
// model can reach high F1 quickly.
Dataset make_separable_pool(const PoolSpec& spec);

// Single-label multi-label pool: counts[l] records carry exactly label l.
// All records are sarcastic-class positives with labels present.
Dataset make_labeled_pool(const std::string& name, Language language,
                          const std::array<std::size_t, kNumLabels>& counts,
                          std::uint64_t seed);

}  // namespace sarckit

#endif  // SARCKIT_SYNTH_HPP
