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

#include <benchmark/benchmark.h>

#include "sarckit/embed.hpp"
#include "sarckit/model.hpp"
#include "sarckit/preprocess.hpp"
#include "sarckit/rng.hpp"

namespace {

const sarckit::Lexicons& lexicons() {
  static sarckit::Lexicons lex =
      sarckit::Lexicons::load(sarckit::Lexicons::default_data_dir());
  return lex;
}

void BM_preprocess_type3(benchmark::State& state) {
  const std::string text =
      "Sooooo happy :-) isn't this greeeat news @friend http://example.com/x";
  const auto& lex = lexicons();
  for (auto _ : state) {
    auto out = sarckit::apply_pipeline(text, sarckit::PreprocessType::III,
                                       sarckit::Language::en, lex);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_preprocess_type3);

void BM_top_k_similar(benchmark::State& state) {
  sarckit::EmbeddingTable table;
  sarckit::SplitRng rng(7);
  for (int i = 0; i < 2000; ++i) {
    Eigen::VectorXd v(50);
    for (int j = 0; j < 50; ++j) v(j) = rng.next_double() - 0.5;
    table.add("w" + std::to_string(i), v);
  }
  for (auto _ : state) {
    auto top = table.top_k_similar("w42", 3);
    benchmark::DoNotOptimize(top);
  }
}
BENCHMARK(BM_top_k_similar);

void BM_bilstm_forward(benchmark::State& state) {
  sarckit::BiLstm lstm(32, static_cast<int>(state.range(0)), 11);
  Eigen::MatrixXd x(24, 32);
  sarckit::SplitRng rng(3);
  for (Eigen::Index i = 0; i < x.size(); ++i)
    x.data()[i] = rng.next_double() - 0.5;
  for (auto _ : state) {
    auto h = lstm.forward(x, nullptr);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_bilstm_forward)->Arg(50)->Arg(100)->Arg(300);

}  // namespace

BENCHMARK_MAIN();
