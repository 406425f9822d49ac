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

#ifndef SARCKIT_TRAIN_HPP
#define SARCKIT_TRAIN_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "sarckit/eval.hpp"
#include "sarckit/model.hpp"
#include "sarckit/preprocess.hpp"
#include "sarckit/types.hpp"

namespace sarckit {

// Whitespace-token vocabulary with reserved control ids.
class Vocabulary {
 public:
  static constexpr int kPad = 0;
  static constexpr int kCls = 1;
  static constexpr int kSep = 2;
  static constexpr int kUnk = 3;

  static Vocabulary build(const std::vector<std::string>& texts,
                          std::size_t min_count = 1);

  int size() const { return static_cast<int>(id_to_word_.size()); }
  int id(const std::string& word) const;
  const std::string& word(int id) const { return id_to_word_.at(static_cast<std::size_t>(id)); }
  // Token ids for a text; prepends [CLS] when add_cls.
  std::vector<int> encode(const std::string& text, bool add_cls = true) const;

 private:
  std::map<std::string, int> word_to_id_;
  std::vector<std::string> id_to_word_;
};

enum class LossKind { ce, weighted_ce, bce };

const char* to_string(LossKind k);
LossKind loss_kind_from_string(const std::string& s);

struct TrainConfig {
  double learning_rate = 0.05;
  int epochs = 5;
  int batch_size = 32;
  LossKind loss = LossKind::ce;
  std::uint64_t seed = 0;
  PreprocessType preprocess_type = PreprocessType::I;
  double momentum = 0.9;
};

struct EpochStats {
  int epoch = 0;  // 1-based
  double train_loss = 0.0;
  double val_metric = 0.0;
};

// Binary and multilabel tasks use Dataset; the pair task uses PairDataset.
using TaskData = std::variant<Dataset, PairDataset>;

struct TrainResult {
  SarcasmModel model;
  Vocabulary vocab;
  std::vector<EpochStats> trace;
  int best_epoch = 0;       // 1-based; earliest epoch on val-metric ties
  double best_val = 0.0;
};

// Mini-batch gradient descent with momentum. The head kind in spec.hier
// must match the task data variant. Datasets are expected to be already
// preprocessed; cfg.preprocess_type is recorded, not applied. The model
// returned carries the parameters of the best validation epoch.
// Divergence (NaN loss) raises TrainingError naming the epoch and batch.
TrainResult train_model(ModelSpec spec, const TaskData& train,
                        const TaskData& val, const TrainConfig& cfg);

// Hard predictions and the task's main metric for a dataset.
MetricsReport evaluate(const SarcasmModel& model, const Vocabulary& vocab,
                       const TaskData& data);

enum class SweepAxis { learning_rate, epochs, hidden_size, dataset, preprocess_type };

const char* to_string(SweepAxis a);

struct SweepSpec {
  SweepAxis axis = SweepAxis::learning_rate;
  std::vector<std::string> values;  // parsed per axis; must be distinct
  TrainConfig base;
  ModelSpec model;
};

struct DataBundle {
  TaskData train;
  TaskData val;
  TaskData test;
};

struct SweepRow {
  std::string value;
  double val_metric = 0.0;
  double test_metric = 0.0;
  std::uint64_t seed = 0;
  std::vector<EpochStats> trace;
};

struct SweepResult {
  SweepAxis axis = SweepAxis::learning_rate;
  std::vector<SweepRow> rows;
  std::size_t best_index = 0;  // argmax val metric, earliest on ties

  // Columns: axis, value, val_metric, test_metric, seed.
  std::string to_csv() const;
};

// One train_model run per axis value, everything else held at spec.base.
// The dataset axis looks each value up in `data` by name; every other axis
// uses the single entry `data` must then contain.
SweepResult sweep(const SweepSpec& spec,
                  const std::map<std::string, DataBundle>& data);

}  // namespace sarckit

#endif  // SARCKIT_TRAIN_HPP
