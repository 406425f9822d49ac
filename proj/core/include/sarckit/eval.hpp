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

#ifndef SARCKIT_EVAL_HPP
#define SARCKIT_EVAL_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "sarckit/types.hpp"

namespace sarckit {

struct ConfusionCounts {
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;

  void add(bool truth, bool pred) {
    if (truth && pred) ++tp;
    else if (!truth && pred) ++fp;
    else if (truth && !pred) ++fn;
    else ++tn;
  }
  void merge(const ConfusionCounts& o) {
    tp += o.tp; fp += o.fp; fn += o.fn; tn += o.tn;
  }
  std::size_t total() const { return tp + fp + fn + tn; }
  double precision() const;
  double recall() const;
  double accuracy() const;
  // F1 of the positive class; 0 when precision + recall is 0.
  double f1() const;
};

// Binary F1 over the positive (sarcastic) class.
double f1_positive(const std::vector<bool>& pred, const std::vector<bool>& gold);

// Unweighted mean of the six per-label F1 scores; a label absent from both
// gold and prediction contributes 0.
double macro_f1(const std::vector<LabelVector>& pred,
                const std::vector<LabelVector>& gold);

// Fraction of pairs whose sarcastic position was identified correctly.
double pair_accuracy(const std::vector<int>& pred, const std::vector<int>& gold);

struct MetricsReport {
  std::string dataset;
  std::string preprocess_type;  // "I".."IV", empty when not applicable
  std::string metric_name;      // "f1_sarcastic", "macro_f1", "pair_accuracy"
  double value = 0.0;           // the main metric
  double accuracy = 0.0;
  std::size_t support = 0;
  // Multi-label detail; zero-filled for binary/pair runs.
  std::array<double, kNumLabels> per_label_precision{};
  std::array<double, kNumLabels> per_label_recall{};
  std::array<double, kNumLabels> per_label_f1{};
};

MetricsReport binary_report(const std::vector<bool>& pred,
                            const std::vector<bool>& gold);
MetricsReport multilabel_report(const std::vector<LabelVector>& pred,
                                const std::vector<LabelVector>& gold);
MetricsReport pair_report(const std::vector<int>& pred,
                          const std::vector<int>& gold);

struct ReportRow {
  std::string run;
  MetricsReport report;
  bool best = false;
};

struct ReportTable {
  std::string title;
  std::vector<ReportRow> rows;

  std::string to_text() const;
  // Columns: run, dataset, preprocess_type, metric_name, value.
  std::string to_csv() const;
};

// One row per run, best main-metric row flagged (earliest on ties).
ReportTable build_report_table(
    const std::vector<std::pair<std::string, MetricsReport>>& runs,
    const std::string& title = "results");

}  // namespace sarckit

#endif  // SARCKIT_EVAL_HPP
