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

#ifndef SARCKIT_CLI_HPP
#define SARCKIT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sarckit/augment.hpp"
#include "sarckit/preprocess.hpp"
#include "sarckit/train.hpp"
#include "sarckit/types.hpp"

namespace sarckit {

// Stable process exit codes.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInput = 3;
constexpr int kExitAugment = 4;
constexpr int kExitTrain = 5;

const char* tool_version();

enum class Subtask { a_en, a_ar, b_en, c_en, c_ar };

const char* to_string(Subtask s);
Subtask subtask_from_string(const std::string& s);
Language subtask_language(Subtask s);

// One JSON config file drives every command; flags override keys 1:1.
struct ExperimentConfig {
  int schema_version = 1;
  Subtask subtask = Subtask::a_en;

  // prepare inputs
  std::string train_csv;
  double train_fraction = 0.6;

  // augment inputs (JSON-lines files)
  std::string train_file;  // defaults to <output_dir>/train.jsonl
  std::vector<std::string> sarcastic_pools;
  std::string ns_pool;
  std::string embeddings;  // word-vector file for substitution

  // train-eval inputs
  std::string val_file;   // defaults to <output_dir>/val.jsonl
  std::string test_file;  // optional; val reused when empty

  PreprocessType preprocess_type = PreprocessType::I;

  // augment block
  std::string augment_method = "schedule";  // schedule|substitution|repetition|heuristic
  int increment = 145;
  int steps = 10;
  int copies_per_record = 1;
  std::optional<std::size_t> target_total;

  ModelSpec model;   // vocab_size resolved at training time
  TrainConfig train;

  // optional sweep block
  bool has_sweep = false;
  SweepAxis sweep_axis = SweepAxis::learning_rate;
  std::vector<std::string> sweep_values;

  std::uint64_t seed = 42;
  std::string output_dir = "out";

  static ExperimentConfig from_json(const std::string& text);
  static ExperimentConfig from_file(const std::string& path);
};

struct CliOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output_dir;
  bool quiet = false;
};

// Command bodies. Each returns an exit code and reports through the streams,
// never by throwing.
int run_prepare(const std::string& config_path, const CliOverrides& ov,
                std::ostream& out, std::ostream& err);
int run_augment(const std::string& config_path, const CliOverrides& ov,
                std::ostream& out, std::ostream& err);
int run_train_eval(const std::string& config_path, const CliOverrides& ov,
                   std::ostream& out, std::ostream& err);
int run_stats(const std::string& config_path, const CliOverrides& ov,
              std::ostream& out, std::ostream& err);
// Canned desk-scale reconstruction of the published dataset arithmetic;
// needs no config file.
int run_reproduce_tables(const CliOverrides& ov, std::ostream& out,
                         std::ostream& err);

}  // namespace sarckit

#endif  // SARCKIT_CLI_HPP
