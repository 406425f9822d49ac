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

#ifndef SARCKIT_MODEL_HPP
#define SARCKIT_MODEL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sarckit/types.hpp"

namespace sarckit {

// Trainable tensor with its accumulated gradient.
struct Param {
  std::string name;
  Eigen::MatrixXd value;
  Eigen::MatrixXd grad;

  Param() = default;
  Param(std::string n, Eigen::Index rows, Eigen::Index cols)
      : name(std::move(n)),
        value(Eigen::MatrixXd::Zero(rows, cols)),
        grad(Eigen::MatrixXd::Zero(rows, cols)) {}
  void zero_grad() { grad.setZero(); }
};

enum class HeadKind { binary_softmax, multilabel_sigmoid, pair_softmax };

const char* to_string(HeadKind k);
HeadKind head_kind_from_string(const std::string& s);

struct HierarchicalConfig {
  int hidden_size = 100;  // H; BiLSTM output width is 2H
  bool use_attention = true;
  int attention_size = 64;  // H_a
  HeadKind head = HeadKind::binary_softmax;
};

// Sequence encoder contract: token ids in, per-token states out. The pooled
// sentence state is by convention the first row (classification token).
class EncoderBackend {
 public:
  virtual ~EncoderBackend() = default;
  virtual int dim() const = 0;
  virtual int max_length() const = 0;
  // Returns a T x dim matrix of token states. T must be >= 1.
  virtual Eigen::MatrixXd encode_states(const std::vector<int>& tokens) const = 0;
};

// Truncates to the backend's max length, encodes, and returns
// (states, pooled = states row 0).
std::pair<Eigen::MatrixXd, Eigen::VectorXd> encode(
    const EncoderBackend& backend, const std::vector<int>& tokens);

// Reference encoder: trainable token embeddings with fixed sinusoidal
// positions, followed by two frozen residual self-attention blocks:
//   A = rowsoftmax(X Wq (X Wk)^T / sqrt(d)),  Y = X + tanh(A X Wv).
// Only the embedding table receives gradients.
class ToyEncoder : public EncoderBackend {
 public:
  static constexpr int kBlocks = 2;

  ToyEncoder(int vocab_size, int dim, int max_len, std::uint64_t seed);

  int dim() const override { return dim_; }
  int max_length() const override { return max_len_; }
  int vocab_size() const { return vocab_size_; }
  Eigen::MatrixXd encode_states(const std::vector<int>& tokens) const override;

  struct Cache {
    std::vector<int> tokens;
    std::vector<Eigen::MatrixXd> x;       // kBlocks+1 entries, x[0] = embedded
    std::vector<Eigen::MatrixXd> attn;    // A per block
    std::vector<Eigen::MatrixXd> values;  // X Wv per block
    std::vector<Eigen::MatrixXd> th;      // tanh(A X Wv) per block
  };
  Eigen::MatrixXd forward(const std::vector<int>& tokens, Cache* cache) const;
  // Accumulates into the embedding gradient.
  void backward(const Cache& cache, const Eigen::MatrixXd& dstates);

  Param& embeddings() { return embed_; }
  const Param& embeddings() const { return embed_; }
  const Eigen::MatrixXd& block_weight(int block, int which) const;  // 0=q,1=k,2=v

 private:
  int vocab_size_, dim_, max_len_;
  Param embed_;                       // V x d
  std::vector<Eigen::MatrixXd> wq_, wk_, wv_;  // frozen, d x d
  Eigen::MatrixXd positions_;         // max_len x d, fixed sinusoidal
};

// Single-layer bidirectional LSTM with standard gates (i, f, g, o).
class BiLstm {
 public:
  BiLstm(int input_dim, int hidden_size, std::uint64_t seed);

  int hidden_size() const { return hidden_; }
  int input_dim() const { return input_; }

  struct DirectionCache {
    std::vector<Eigen::VectorXd> i, f, g, o, c, h, tanh_c;
  };
  struct Cache {
    Eigen::MatrixXd x;  // T x input
    DirectionCache fwd, bwd;
  };
  // T x input -> T x 2H; row t = [h_fwd(t); h_bwd(t)].
  Eigen::MatrixXd forward(const Eigen::MatrixXd& states, Cache* cache) const;
  // Returns dX (T x input) and accumulates parameter gradients.
  Eigen::MatrixXd backward(const Cache& cache, const Eigen::MatrixXd& dout);

  std::vector<Param*> params();

 private:
  int input_, hidden_;
  // Stacked gate blocks, 4H rows in i,f,g,o order.
  Param wf_, uf_, bf_;  // forward direction
  Param wb_, ub_, bb_;  // backward direction
};

// Additive attention pooling: e_t = v . tanh(W h_t), alpha = softmax(e),
// output = sum_t alpha_t h_t.
class AttnPool {
 public:
  AttnPool(int state_dim, int attn_size, std::uint64_t seed);

  struct Cache {
    Eigen::MatrixXd h;      // T x 2H
    Eigen::MatrixXd th;     // T x H_a, tanh(h W^T)
    Eigen::VectorXd alpha;  // T
  };
  Eigen::VectorXd forward(const Eigen::MatrixXd& states, Cache* cache) const;
  Eigen::MatrixXd backward(const Cache& cache, const Eigen::VectorXd& dout);

  const Eigen::VectorXd& last_alpha(const Cache& c) const { return c.alpha; }
  std::vector<Param*> params();

 private:
  int state_dim_, attn_size_;
  Param w_;  // H_a x 2H
  Param v_;  // H_a x 1
};

class Linear {
 public:
  Linear(int in_dim, int out_dim, std::uint64_t seed);

  Eigen::VectorXd forward(const Eigen::VectorXd& in) const;
  // Returns d_in and accumulates parameter gradients.
  Eigen::VectorXd backward(const Eigen::VectorXd& in, const Eigen::VectorXd& dout);

  std::vector<Param*> params();

 private:
  Param w_;  // out x in
  Param b_;  // out x 1
};

Eigen::VectorXd softmax(const Eigen::VectorXd& logits);
Eigen::VectorXd sigmoid(const Eigen::VectorXd& logits);

// Weighted binary cross-entropy over softmax probabilities. Class weights
// are the inverse class counts (w_NS = 1/#NS, w_S = 1/#S); the batch loss
// is sum(w * -ln p_target) / sum(w), so uniformly scaled weights cancel.
// targets: 0 = non-sarcastic, 1 = sarcastic. Zero counts are a ConfigError.
double weighted_cross_entropy(const std::vector<Eigen::VectorXd>& probs,
                              const std::vector<int>& targets,
                              std::size_t ns_count, std::size_t s_count);

// Mean over the six labels of -[y ln p + (1-y) ln(1-p)].
double multilabel_bce(const Eigen::VectorXd& probs, const LabelVector& target);

struct ModelSpec {
  int vocab_size = 0;
  int encoder_dim = 32;
  int max_len = 128;
  bool hierarchical = true;  // false: head reads the pooled encoder state
  HierarchicalConfig hier;
  std::uint64_t seed = 0;
  int cls_id = 1;
  int sep_id = 2;
};

// Pair inputs [CLS] a [SEP] b [SEP]; when over budget the longer text is
// trimmed first, one token at a time.
std::pair<std::vector<int>, std::vector<int>> pair_truncate(
    std::vector<int> a, std::vector<int> b, int max_len);

// Encoder + optional BiLSTM(+attention) stack + task head.
class SarcasmModel {
 public:
  explicit SarcasmModel(const ModelSpec& spec);

  const ModelSpec& spec() const { return spec_; }
  ToyEncoder& encoder() { return *encoder_; }

  struct Cache {
    ToyEncoder::Cache enc;
    BiLstm::Cache lstm;
    AttnPool::Cache attn;
    Eigen::VectorXd head_in;
    Eigen::VectorXd logits;
  };

  // Raw logits (2 for binary/pair heads, 6 for multilabel).
  Eigen::VectorXd logits(const std::vector<int>& tokens, Cache* cache) const;
  Eigen::VectorXd pair_logits(const std::vector<int>& tokens_a,
                              const std::vector<int>& tokens_b,
                              Cache* cache) const;
  void backward(const Cache& cache, const Eigen::VectorXd& dlogits);

  // Probability-level forward passes.
  Eigen::VectorXd forward_binary(const std::vector<int>& tokens) const;
  Eigen::VectorXd forward_multilabel(const std::vector<int>& tokens) const;
  Eigen::VectorXd forward_pair(const std::vector<int>& tokens_a,
                               const std::vector<int>& tokens_b) const;

  std::vector<Param*> params();
  void zero_grad();
  Eigen::VectorXd flat_params() const;
  void set_flat_params(const Eigen::VectorXd& flat);
  Eigen::VectorXd flat_grads() const;

  // Versioned JSON checkpoint with shapes, seed, and flat parameters.
  std::string to_checkpoint_json() const;
  static SarcasmModel from_checkpoint_json(const std::string& json_text);

 private:
  ModelSpec spec_;
  std::unique_ptr<ToyEncoder> encoder_;
  std::unique_ptr<BiLstm> lstm_;
  std::unique_ptr<AttnPool> attn_;
  std::unique_ptr<Linear> head_;
  int head_out() const;
  int head_in_dim() const;
};

}  // namespace sarckit

#endif  // SARCKIT_MODEL_HPP
