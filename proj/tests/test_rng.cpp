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
#include <numeric>
#include <set>
#include <vector>

#include <doctest.h>

#include "sarckit/rng.hpp"

using sarckit::SplitRng;

TEST_CASE("same seed reproduces the sequence") {
  SplitRng a(123), b(123);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("different seeds diverge") {
  SplitRng a(1), b(2);
  int same = 0;
  for (int i = 0; i < 64; ++i)
    if (a.next_u64() == b.next_u64()) ++same;
  CHECK(same == 0);
}

TEST_CASE("fork derives independent deterministic streams") {
  SplitRng root(7);
  auto a1 = root.fork("alpha");
  auto a2 = root.fork("alpha");
  auto b = root.fork("beta");
  CHECK(a1.next_u64() == a2.next_u64());
  SplitRng a3 = SplitRng(7).fork("alpha");
  a1 = SplitRng(7).fork("alpha");
  CHECK(a1.next_u64() == a3.next_u64());
  // Distinct purposes must not collide on a prefix.
  auto a = root.fork("alpha");
  int same = 0;
  for (int i = 0; i < 64; ++i)
    if (a.next_u64() == b.next_u64()) ++same;
  CHECK(same == 0);
}

TEST_CASE("below stays in range and covers small domains") {
  SplitRng rng(99);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t v = rng.below(7);
    CHECK(v < 7);
    seen.insert(v);
  }
  CHECK(seen.size() == 7);
}

TEST_CASE("next_double lies in [0,1)") {
  SplitRng rng(5);
  for (int i = 0; i < 1000; ++i) {
    double d = rng.next_double();
    CHECK(d >= 0.0);
    CHECK(d < 1.0);
  }
}

TEST_CASE("shuffle permutes without loss") {
  SplitRng rng(11);
  std::vector<int> v(100);
  std::iota(v.begin(), v.end(), 0);
  auto orig = v;
  rng.shuffle(v);
  CHECK(v != orig);  // astronomically unlikely to be identity
  auto sorted = v;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == orig);
}

TEST_CASE("shuffle is seed-deterministic") {
  std::vector<int> a(50), b(50);
  std::iota(a.begin(), a.end(), 0);
  std::iota(b.begin(), b.end(), 0);
  SplitRng r1(3), r2(3);
  r1.shuffle(a);
  r2.shuffle(b);
  CHECK(a == b);
}

TEST_CASE("hash64 is FNV-1a") {
  // Published FNV-1a 64-bit test vectors.
  CHECK(sarckit::hash64("") == 0xcbf29ce484222325ULL);
  CHECK(sarckit::hash64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(sarckit::hash64("foobar") == 0x85944171f73967e8ULL);
}
