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

#include "sarckit/embed.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>

#include <zlib.h>

namespace sarckit {

double cosine_similarity(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return a.dot(b) / (na * nb);
}

void EmbeddingTable::add(const std::string& word, const Eigen::VectorXd& vec) {
  if (dim_ == 0) {
    dim_ = static_cast<int>(vec.size());
  } else if (vec.size() != dim_) {
    throw ParseError("embedding dimension mismatch for word '" + word + "'");
  }
  if (!vec.allFinite())
    throw ParseError("embedding for '" + word + "' has NaN/Inf components");
  if (index_.count(word)) {
    ++duplicates_;
    return;
  }
  if (rows_used_ == static_cast<std::size_t>(vectors_.rows())) {
    std::size_t cap = std::max<std::size_t>(64, rows_used_ * 2);
    vectors_.conservativeResize(static_cast<Eigen::Index>(cap), dim_);
  }
  vectors_.row(static_cast<Eigen::Index>(rows_used_)) = vec.transpose();
  index_[word] = rows_used_;
  words_.push_back(word);
  ++rows_used_;
  norms_.conservativeResize(static_cast<Eigen::Index>(rows_used_));
  norms_(static_cast<Eigen::Index>(rows_used_ - 1)) = vec.norm();
}

EmbeddingTable EmbeddingTable::load(const std::string& path,
                                    std::optional<int> expected_dim) {
  // gzopen reads both gzip and plain files.
  gzFile f = gzopen(path.c_str(), "rb");
  if (f == nullptr) throw ParseError("cannot open vector file " + path);

  EmbeddingTable table;
  std::string line;
  std::vector<char> buf(1 << 16);
  std::size_t line_no = 0;
  std::string carry;
  bool done = false;
  while (!done) {
    char* got = gzgets(f, buf.data(), static_cast<int>(buf.size()));
    if (got == nullptr) {
      done = true;
      if (carry.empty()) break;
      line = carry;
      carry.clear();
    } else {
      carry += got;
      if (carry.empty() || carry.back() != '\n') continue;
      line = carry;
      carry.clear();
    }
    ++line_no;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
      line.pop_back();
    if (line.empty()) continue;

    std::size_t sp = line.find(' ');
    if (sp == std::string::npos) {
      gzclose(f);
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": malformed vector line (no components)");
    }
    std::string word = line.substr(0, sp);
    std::vector<double> values;
    std::size_t pos = sp + 1;
    while (pos < line.size()) {
      while (pos < line.size() && line[pos] == ' ') ++pos;
      if (pos >= line.size()) break;
      std::size_t end = line.find(' ', pos);
      if (end == std::string::npos) end = line.size();
      double v = 0.0;
      auto [p, ec] = std::from_chars(line.data() + pos, line.data() + end, v);
      if (ec != std::errc() || p != line.data() + end) {
        gzclose(f);
        throw ParseError(path + ":" + std::to_string(line_no) +
                         ": malformed component '" +
                         line.substr(pos, end - pos) + "'");
      }
      values.push_back(v);
      pos = end;
    }
    if (values.empty()) {
      gzclose(f);
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": malformed vector line (no components)");
    }
    if (expected_dim.has_value() &&
        static_cast<int>(values.size()) != *expected_dim) {
      gzclose(f);
      throw ParseError(path + ":" + std::to_string(line_no) + ": dimension " +
                       std::to_string(values.size()) + " != expected " +
                       std::to_string(*expected_dim));
    }
    Eigen::VectorXd vec =
        Eigen::Map<Eigen::VectorXd>(values.data(),
                                    static_cast<Eigen::Index>(values.size()));
    try {
      table.add(word, vec);
    } catch (const ParseError& e) {
      gzclose(f);
      throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  gzclose(f);
  return table;
}

Eigen::VectorXd EmbeddingTable::vector(const std::string& word) const {
  auto it = index_.find(word);
  if (it == index_.end()) throw std::out_of_range("OOV word: " + word);
  return vectors_.row(static_cast<Eigen::Index>(it->second)).transpose();
}

std::vector<ScoredWord> EmbeddingTable::top_k_similar(const std::string& word,
                                                      int k) const {
  if (k < 1) throw ConfigError("top_k_similar: k must be >= 1");
  auto it = index_.find(word);
  if (it == index_.end()) throw std::out_of_range("OOV word: " + word);
  Eigen::Index qi = static_cast<Eigen::Index>(it->second);
  double qnorm = norms_(qi);
  if (qnorm == 0.0) return {};

  Eigen::VectorXd q = vectors_.row(qi).transpose();
  std::vector<ScoredWord> scored;
  scored.reserve(rows_used_);
  for (std::size_t i = 0; i < rows_used_; ++i) {
    if (static_cast<Eigen::Index>(i) == qi) continue;
    double n = norms_(static_cast<Eigen::Index>(i));
    if (n == 0.0) continue;  // cosine undefined, excluded
    double score =
        vectors_.row(static_cast<Eigen::Index>(i)).dot(q) / (n * qnorm);
    scored.push_back({words_[i], score});
  }
  auto better = [](const ScoredWord& a, const ScoredWord& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.word < b.word;
  };
  std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(k),
                                           scored.size());
  std::partial_sort(scored.begin(),
                    scored.begin() + static_cast<std::ptrdiff_t>(take),
                    scored.end(), better);
  scored.resize(take);
  return scored;
}

}  // namespace sarckit
