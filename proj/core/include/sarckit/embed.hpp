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

#ifndef SARCKIT_EMBED_HPP
#define SARCKIT_EMBED_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "sarckit/types.hpp"

namespace sarckit {

struct ScoredWord {
  std::string word;
  double score = 0.0;
  bool operator==(const ScoredWord&) const = default;
};

// Immutable word-vector table with exact cosine top-k queries.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;

  // Standard text vector format: one "word v1 v2 ... vd" line per word,
  // UTF-8, space-separated. Transparently reads gzip files. Duplicate words
  // keep the first occurrence (counted); a malformed line or a dimension
  // mismatch against expected_dim raises ParseError naming the line.
  static EmbeddingTable load(const std::string& path,
                             std::optional<int> expected_dim = std::nullopt);

  // Builder for tests and synthetic tables.
  void add(const std::string& word, const Eigen::VectorXd& vec);

  int dim() const { return dim_; }
  std::size_t size() const { return words_.size(); }
  std::size_t duplicate_count() const { return duplicates_; }
  bool contains(const std::string& word) const { return index_.count(word) > 0; }
  const std::vector<std::string>& words() const { return words_; }
  Eigen::VectorXd vector(const std::string& word) const;

  // k closest distinct words by cosine similarity, excluding the query and
  // zero-norm rows; ties broken by ascending word order. Exact scan.
  // Throws std::out_of_range for OOV queries (callers skip such words).
  std::vector<ScoredWord> top_k_similar(const std::string& word, int k) const;

 private:
  int dim_ = 0;
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t> index_;
  Eigen::MatrixXd vectors_;  // rows = words
  Eigen::VectorXd norms_;
  std::size_t rows_used_ = 0;
  std::size_t duplicates_ = 0;
};

double cosine_similarity(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

}  // namespace sarckit

#endif  // SARCKIT_EMBED_HPP
