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

#include "sarckit/train.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "sarckit/rng.hpp"

namespace sarckit {

// ---------------------------------------------------------------------------
// Vocabulary

Vocabulary Vocabulary::build(const std::vector<std::string>& texts,
                             std::size_t min_count) {
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& text : texts) {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) ++counts[tok];
  }
  std::vector<std::pair<std::string, std::size_t>> sorted(counts.begin(),
                                                          counts.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  Vocabulary v;
  v.id_to_word_ = {"<pad>", "<cls>", "<sep>", "<unk>"};
  for (std::size_t i = 0; i < v.id_to_word_.size(); ++i)
    v.word_to_id_[v.id_to_word_[i]] = static_cast<int>(i);
  for (const auto& [word, count] : sorted) {
    if (count < min_count) continue;
    v.word_to_id_[word] = static_cast<int>(v.id_to_word_.size());
    v.id_to_word_.push_back(word);
  }
  return v;
}

int Vocabulary::id(const std::string& word) const {
  auto it = word_to_id_.find(word);
  return it == word_to_id_.end() ? kUnk : it->second;
}

std::vector<int> Vocabulary::encode(const std::string& text, bool add_cls) const {
  std::vector<int> ids;
  if (add_cls) ids.push_back(kCls);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) ids.push_back(id(tok));
  if (ids.empty()) ids.push_back(kUnk);
  return ids;
}

const char* to_string(LossKind k) {
  switch (k) {
    case LossKind::ce: return "ce";
    case LossKind::weighted_ce: return "weighted_ce";
    case LossKind::bce: return "bce";
  }
  return "ce";
}

LossKind loss_kind_from_string(const std::string& s) {
  if (s == "ce") return LossKind::ce;
  if (s == "weighted_ce") return LossKind::weighted_ce;
  if (s == "bce") return LossKind::bce;
  throw ConfigError("unknown loss kind '" + s + "'");
}

// ---------------------------------------------------------------------------
// train_model

namespace {

struct Example {
  std::vector<int> tokens;    // binary / multilabel input
  std::vector<int> tokens_b;  // pair second text (tokens = first text)
  int target = 0;             // binary / pair class
  LabelVector labels;         // multilabel target
};

std::vector<Example> make_examples(const TaskData& data, const Vocabulary& vocab,
                                   HeadKind head) {
  std::vector<Example> out;
  if (head == HeadKind::pair_softmax) {
    const auto* pd = std::get_if<PairDataset>(&data);
    if (!pd)
      throw ConfigError("pair head requires pair data");
    out.reserve(pd->records.size());
    for (const auto& r : pd->records) {
      Example e;
      e.tokens = vocab.encode(r.text_a, /*add_cls=*/false);
      e.tokens_b = vocab.encode(r.text_b, /*add_cls=*/false);
      e.target = r.label;
      out.push_back(std::move(e));
    }
    return out;
  }
  const auto* ds = std::get_if<Dataset>(&data);
  if (!ds)
    throw ConfigError("binary/multilabel heads require tweet data");
  out.reserve(ds->records.size());
  for (const auto& r : ds->records) {
    Example e;
    e.tokens = vocab.encode(r.text);
    e.target = r.sarcastic.value_or(false) ? 1 : 0;
    if (r.labels) e.labels = *r.labels;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::string> collect_texts(const TaskData& data) {
  std::vector<std::string> texts;
  if (const auto* ds = std::get_if<Dataset>(&data)) {
    for (const auto& r : ds->records) texts.push_back(r.text);
  } else {
    const auto& pd = std::get<PairDataset>(data);
    for (const auto& r : pd.records) {
      texts.push_back(r.text_a);
      texts.push_back(r.text_b);
    }
  }
  return texts;
}

std::size_t task_size(const TaskData& data) {
  if (const auto* ds = std::get_if<Dataset>(&data)) return ds->size();
  return std::get<PairDataset>(data).size();
}

std::string task_name(const TaskData& data) {
  if (const auto* ds = std::get_if<Dataset>(&data)) return ds->name;
  return std::get<PairDataset>(data).name;
}

Eigen::VectorXd model_logits(const SarcasmModel& model, const Example& e,
                             HeadKind head, SarcasmModel::Cache* cache) {
  if (head == HeadKind::pair_softmax)
    return model.pair_logits(e.tokens, e.tokens_b, cache);
  return model.logits(e.tokens, cache);
}

}  // namespace

MetricsReport evaluate(const SarcasmModel& model, const Vocabulary& vocab,
                       const TaskData& data) {
  HeadKind head = model.spec().hier.head;
  auto examples = make_examples(data, vocab, head);
  MetricsReport report;
  if (head == HeadKind::multilabel_sigmoid) {
    std::vector<LabelVector> pred, gold;
    for (const auto& e : examples) {
      Eigen::VectorXd p = model.forward_multilabel(e.tokens);
      LabelVector lv;
      for (int l = 0; l < kNumLabels; ++l) lv[l] = p(l) > 0.5;
      pred.push_back(lv);
      gold.push_back(e.labels);
    }
    report = multilabel_report(pred, gold);
  } else if (head == HeadKind::pair_softmax) {
    std::vector<int> pred, gold;
    for (const auto& e : examples) {
      Eigen::VectorXd p = model.forward_pair(e.tokens, e.tokens_b);
      pred.push_back(p(1) > p(0) ? 1 : 0);
      gold.push_back(e.target);
    }
    report = pair_report(pred, gold);
  } else {
    std::vector<bool> pred, gold;
    for (const auto& e : examples) {
      Eigen::VectorXd p = model.forward_binary(e.tokens);
      pred.push_back(p(1) > p(0));
      gold.push_back(e.target == 1);
    }
    report = binary_report(pred, gold);
  }
  report.dataset = task_name(data);
  return report;
}

TrainResult train_model(ModelSpec spec, const TaskData& train,
                        const TaskData& val, const TrainConfig& cfg) {
  if (cfg.epochs < 1) throw ConfigError("train: epochs must be >= 1");
  if (cfg.learning_rate <= 0.0) throw ConfigError("train: learning_rate must be positive");
  if (cfg.batch_size < 1) throw ConfigError("train: batch_size must be >= 1");
  if (cfg.momentum < 0.0 || cfg.momentum >= 1.0)
    throw ConfigError("train: momentum must be in [0,1)");
  if (task_size(train) == 0 || task_size(val) == 0)
    throw ConfigError("train: empty dataset");
  HeadKind head = spec.hier.head;
  if (cfg.loss == LossKind::bce && head != HeadKind::multilabel_sigmoid)
    throw ConfigError("train: bce loss requires the multilabel head");
  if (cfg.loss != LossKind::bce && head == HeadKind::multilabel_sigmoid)
    throw ConfigError("train: multilabel head requires bce loss");

  Vocabulary vocab = Vocabulary::build(collect_texts(train));
  spec.vocab_size = vocab.size();
  spec.cls_id = Vocabulary::kCls;
  spec.sep_id = Vocabulary::kSep;
  SarcasmModel model(spec);

  auto train_ex = make_examples(train, vocab, head);

  std::size_t ns_count = 0, s_count = 0;
  if (cfg.loss == LossKind::weighted_ce) {
    for (const auto& e : train_ex) (e.target == 1 ? s_count : ns_count)++;
    if (ns_count == 0 || s_count == 0)
      throw ConfigError("train: weighted_ce needs both classes present");
  }
  double w_ns = ns_count ? 1.0 / static_cast<double>(ns_count) : 1.0;
  double w_s = s_count ? 1.0 / static_cast<double>(s_count) : 1.0;

  auto params = model.params();
  std::vector<Eigen::MatrixXd> velocity;
  velocity.reserve(params.size());
  for (Param* p : params)
    velocity.push_back(Eigen::MatrixXd::Zero(p->value.rows(), p->value.cols()));

  SplitRng root(cfg.seed);
  TrainResult result{std::move(model), std::move(vocab), {}, 0,
                     -std::numeric_limits<double>::infinity()};
  Eigen::VectorXd best_params = result.model.flat_params();

  std::vector<std::size_t> order(train_ex.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    auto rng = root.fork("epoch:" + std::to_string(epoch));
    rng.shuffle(order);
    double loss_sum = 0.0;
    std::size_t batch_count = 0;
    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(cfg.batch_size)) {
      std::size_t stop = std::min(
          order.size(), start + static_cast<std::size_t>(cfg.batch_size));
      std::size_t bsize = stop - start;
      result.model.zero_grad();

      double batch_loss = 0.0;
      // Per-sample caches and probabilities first; for weighted_ce the
      // normalizer is the batch weight sum.
      double weight_sum = 0.0;
      std::vector<SarcasmModel::Cache> caches(bsize);
      std::vector<Eigen::VectorXd> probs(bsize);
      try {
      for (std::size_t bi = 0; bi < bsize; ++bi) {
        const Example& e = train_ex[order[start + bi]];
        Eigen::VectorXd z = model_logits(result.model, e, head, &caches[bi]);
        if (head == HeadKind::multilabel_sigmoid)
          probs[bi] = sigmoid(z);
        else
          probs[bi] = softmax(z);
        if (cfg.loss == LossKind::weighted_ce)
          weight_sum += e.target == 1 ? w_s : w_ns;
      }
      for (std::size_t bi = 0; bi < bsize; ++bi) {
        const Example& e = train_ex[order[start + bi]];
        Eigen::VectorXd dz;
        if (cfg.loss == LossKind::bce) {
          batch_loss += multilabel_bce(probs[bi], e.labels) /
                        static_cast<double>(bsize);
          dz = probs[bi];
          for (int l = 0; l < kNumLabels; ++l) dz(l) -= e.labels[l] ? 1.0 : 0.0;
          dz /= static_cast<double>(kNumLabels) * static_cast<double>(bsize);
        } else {
          double p = std::max(probs[bi](e.target), 1e-12);
          double w = 1.0, norm = static_cast<double>(bsize);
          if (cfg.loss == LossKind::weighted_ce) {
            w = e.target == 1 ? w_s : w_ns;
            norm = weight_sum;
          }
          batch_loss += w * -std::log(p) / norm;
          dz = probs[bi];
          dz(e.target) -= 1.0;
          dz *= w / norm;
        }
        result.model.backward(caches[bi], dz);
      }
      } catch (const TrainingError& e) {
        throw TrainingError("training diverged at epoch " +
                            std::to_string(epoch) + ", batch " +
                            std::to_string(batch_count + 1) + ": " + e.what());
      }
      if (!std::isfinite(batch_loss))
        throw TrainingError("training diverged (non-finite loss) at epoch " +
                            std::to_string(epoch) + ", batch " +
                            std::to_string(batch_count + 1));
      loss_sum += batch_loss;
      ++batch_count;

      for (std::size_t pi = 0; pi < params.size(); ++pi) {
        velocity[pi] = cfg.momentum * velocity[pi] -
                       cfg.learning_rate * params[pi]->grad;
        params[pi]->value += velocity[pi];
      }
    }

    double val_metric = evaluate(result.model, result.vocab, val).value;
    result.trace.push_back(
        {epoch, loss_sum / static_cast<double>(batch_count), val_metric});
    if (val_metric > result.best_val) {
      result.best_val = val_metric;
      result.best_epoch = epoch;
      best_params = result.model.flat_params();
    }
  }
  result.model.set_flat_params(best_params);
  return result;
}

// ---------------------------------------------------------------------------
// sweep

const char* to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::learning_rate: return "learning_rate";
    case SweepAxis::epochs: return "epochs";
    case SweepAxis::hidden_size: return "hidden_size";
    case SweepAxis::dataset: return "dataset";
    case SweepAxis::preprocess_type: return "preprocess_type";
  }
  return "learning_rate";
}

std::string SweepResult::to_csv() const {
  std::ostringstream out;
  out << "axis,value,val_metric,test_metric,seed\n";
  for (const auto& r : rows)
    out << to_string(axis) << ',' << r.value << ',' << std::fixed
        << std::setprecision(6) << r.val_metric << ',' << r.test_metric << ','
        << r.seed << '\n';
  return out.str();
}

SweepResult sweep(const SweepSpec& spec,
                  const std::map<std::string, DataBundle>& data) {
  if (spec.values.empty()) throw ConfigError("sweep: no values");
  {
    auto sorted = spec.values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ConfigError("sweep: values must be distinct");
  }
  if (data.empty()) throw ConfigError("sweep: no datasets");
  if (spec.axis != SweepAxis::dataset && data.size() != 1)
    throw ConfigError("sweep: non-dataset axes take exactly one data bundle");

  SweepResult result;
  result.axis = spec.axis;
  for (const auto& value : spec.values) {
    TrainConfig cfg = spec.base;
    ModelSpec mspec = spec.model;
    const DataBundle* bundle = &data.begin()->second;
    switch (spec.axis) {
      case SweepAxis::learning_rate:
        cfg.learning_rate = std::stod(value);
        break;
      case SweepAxis::epochs:
        cfg.epochs = std::stoi(value);
        break;
      case SweepAxis::hidden_size:
        mspec.hier.hidden_size = std::stoi(value);
        break;
      case SweepAxis::preprocess_type:
        cfg.preprocess_type = preprocess_type_from_string(value);
        break;
      case SweepAxis::dataset: {
        auto it = data.find(value);
        if (it == data.end())
          throw ConfigError("sweep: unknown dataset '" + value + "'");
        bundle = &it->second;
        break;
      }
    }
    TrainResult tr = train_model(mspec, bundle->train, bundle->val, cfg);
    double test_metric = evaluate(tr.model, tr.vocab, bundle->test).value;
    result.rows.push_back(
        {value, tr.best_val, test_metric, cfg.seed, std::move(tr.trace)});
  }
  result.best_index = 0;
  for (std::size_t i = 1; i < result.rows.size(); ++i)
    if (result.rows[i].val_metric > result.rows[result.best_index].val_metric)
      result.best_index = i;
  return result;
}

}  // namespace sarckit
