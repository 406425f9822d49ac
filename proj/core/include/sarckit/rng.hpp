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

#ifndef SARCKIT_RNG_HPP
#define SARCKIT_RNG_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace sarckit {

// Deterministic splittable generator. All randomness in the pipeline flows
// from one user-supplied seed; sub-streams are derived by name so that
// independent operations never share draws. Platform-independent by
// construction (splitmix64, no std::distribution involved).
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed);

  // Derives an independent child stream identified by purpose.
  SplitRng fork(std::string_view purpose) const;

  std::uint64_t next_u64();

  // Uniform in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);

  // Uniform in [0, 1).
  double next_double();

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(v[i - 1], v[j]);
    }
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

// FNV-1a, used for purpose-string hashing in SplitRng::fork.
std::uint64_t hash64(std::string_view s);

}  // namespace sarckit

#endif  // SARCKIT_RNG_HPP
