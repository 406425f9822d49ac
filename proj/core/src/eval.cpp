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

#include "sarckit/eval.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace sarckit {

double ConfusionCounts::precision() const {
  std::size_t denom = tp + fp;
  return denom == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(denom);
}

double ConfusionCounts::recall() const {
  std::size_t denom = tp + fn;
  return denom == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(denom);
}

double ConfusionCounts::accuracy() const {
  std::size_t n = total();
  return n == 0 ? 0.0 : static_cast<double>(tp + tn) / static_cast<double>(n);
}

double ConfusionCounts::f1() const {
  double p = precision(), r = recall();
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

namespace {

void check_sizes(std::size_t a, std::size_t b, const char* op) {
  if (a != b)
    throw ConfigError(std::string(op) + ": prediction and gold sizes differ (" +
                      std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace

double f1_positive(const std::vector<bool>& pred, const std::vector<bool>& gold) {
  check_sizes(pred.size(), gold.size(), "f1_positive");
  ConfusionCounts c;
  for (std::size_t i = 0; i < pred.size(); ++i) c.add(gold[i], pred[i]);
  return c.f1();
}

double macro_f1(const std::vector<LabelVector>& pred,
                const std::vector<LabelVector>& gold) {
  check_sizes(pred.size(), gold.size(), "macro_f1");
  double sum = 0.0;
  for (int l = 0; l < kNumLabels; ++l) {
    ConfusionCounts c;
    for (std::size_t i = 0; i < pred.size(); ++i) c.add(gold[i][l], pred[i][l]);
    sum += c.f1();
  }
  return sum / kNumLabels;
}

double pair_accuracy(const std::vector<int>& pred, const std::vector<int>& gold) {
  check_sizes(pred.size(), gold.size(), "pair_accuracy");
  if (pred.empty()) return 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < pred.size(); ++i)
    if (pred[i] == gold[i]) ++hits;
  return static_cast<double>(hits) / static_cast<double>(pred.size());
}

MetricsReport binary_report(const std::vector<bool>& pred,
                            const std::vector<bool>& gold) {
  check_sizes(pred.size(), gold.size(), "binary_report");
  ConfusionCounts c;
  for (std::size_t i = 0; i < pred.size(); ++i) c.add(gold[i], pred[i]);
  MetricsReport r;
  r.metric_name = "f1_sarcastic";
  r.value = c.f1();
  r.accuracy = c.accuracy();
  r.support = pred.size();
  return r;
}

MetricsReport multilabel_report(const std::vector<LabelVector>& pred,
                                const std::vector<LabelVector>& gold) {
  check_sizes(pred.size(), gold.size(), "multilabel_report");
  MetricsReport r;
  r.metric_name = "macro_f1";
  r.support = pred.size();
  double sum = 0.0;
  for (int l = 0; l < kNumLabels; ++l) {
    ConfusionCounts c;
    for (std::size_t i = 0; i < pred.size(); ++i) c.add(gold[i][l], pred[i][l]);
    auto li = static_cast<std::size_t>(l);
    r.per_label_precision[li] = c.precision();
    r.per_label_recall[li] = c.recall();
    r.per_label_f1[li] = c.f1();
    sum += c.f1();
  }
  r.value = sum / kNumLabels;
  // Exact-match accuracy over full label vectors.
  std::size_t exact = 0;
  for (std::size_t i = 0; i < pred.size(); ++i)
    if (pred[i] == gold[i]) ++exact;
  r.accuracy = pred.empty()
                   ? 0.0
                   : static_cast<double>(exact) / static_cast<double>(pred.size());
  return r;
}

MetricsReport pair_report(const std::vector<int>& pred,
                          const std::vector<int>& gold) {
  MetricsReport r;
  r.metric_name = "pair_accuracy";
  r.value = pair_accuracy(pred, gold);
  r.accuracy = r.value;
  r.support = pred.size();
  return r;
}

ReportTable build_report_table(
    const std::vector<std::pair<std::string, MetricsReport>>& runs,
    const std::string& title) {
  if (runs.empty()) throw ConfigError("build_report_table: no runs");
  ReportTable t;
  t.title = title;
  t.rows.reserve(runs.size());
  for (const auto& [run, report] : runs) t.rows.push_back({run, report, false});
  std::size_t best = 0;
  for (std::size_t i = 1; i < t.rows.size(); ++i)
    if (t.rows[i].report.value > t.rows[best].report.value) best = i;
  t.rows[best].best = true;
  return t;
}

std::string ReportTable::to_text() const {
  std::size_t run_w = std::string("run").size();
  for (const auto& r : rows) run_w = std::max(run_w, r.run.size());
  std::ostringstream out;
  out << title << '\n';
  out << std::left << std::setw(static_cast<int>(run_w + 2)) << "run"
      << std::setw(14) << "metric" << "value\n";
  out << std::string(run_w + 2 + 14 + 8, '-') << '\n';
  for (const auto& r : rows) {
    out << std::left << std::setw(static_cast<int>(run_w + 2)) << r.run
        << std::setw(14) << r.report.metric_name << std::fixed
        << std::setprecision(4) << r.report.value << (r.best ? "  *" : "")
        << '\n';
  }
  return out.str();
}

std::string ReportTable::to_csv() const {
  std::ostringstream out;
  out << "run,dataset,preprocess_type,metric_name,value\n";
  for (const auto& r : rows)
    out << r.run << ',' << r.report.dataset << ',' << r.report.preprocess_type
        << ',' << r.report.metric_name << ',' << std::fixed
        << std::setprecision(6) << r.report.value << '\n';
  return out.str();
}

}  // namespace sarckit
