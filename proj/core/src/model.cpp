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

#include "sarckit/model.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "sarckit/rng.hpp"

namespace sarckit {

namespace {

using json = nlohmann::ordered_json;

void fill_uniform(Eigen::MatrixXd& m, SplitRng& rng, double radius) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = (2.0 * rng.next_double() - 1.0) * radius;
}

Eigen::MatrixXd sinusoidal_positions(int max_len, int dim) {
  Eigen::MatrixXd p(max_len, dim);
  for (int t = 0; t < max_len; ++t) {
    for (int j = 0; j < dim; ++j) {
      double rate = std::pow(10000.0, -2.0 * (j / 2) / static_cast<double>(dim));
      double angle = t * rate;
      p(t, j) = (j % 2 == 0) ? std::sin(angle) : std::cos(angle);
    }
  }
  return p;
}

Eigen::MatrixXd row_softmax(const Eigen::MatrixXd& s) {
  Eigen::MatrixXd a(s.rows(), s.cols());
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    Eigen::VectorXd row = s.row(i).transpose();
    a.row(i) = softmax(row).transpose();
  }
  return a;
}

constexpr double kProbFloor = 1e-12;

}  // namespace

const char* to_string(HeadKind k) {
  switch (k) {
    case HeadKind::binary_softmax: return "binary_softmax";
    case HeadKind::multilabel_sigmoid: return "multilabel_sigmoid";
    case HeadKind::pair_softmax: return "pair_softmax";
  }
  return "binary_softmax";
}

HeadKind head_kind_from_string(const std::string& s) {
  if (s == "binary_softmax") return HeadKind::binary_softmax;
  if (s == "multilabel_sigmoid") return HeadKind::multilabel_sigmoid;
  if (s == "pair_softmax") return HeadKind::pair_softmax;
  throw ConfigError("unknown head kind '" + s + "'");
}

Eigen::VectorXd softmax(const Eigen::VectorXd& logits) {
  double m = logits.maxCoeff();
  Eigen::VectorXd e = (logits.array() - m).exp();
  return e / e.sum();
}

Eigen::VectorXd sigmoid(const Eigen::VectorXd& logits) {
  return logits.unaryExpr(
      [](double z) { return 1.0 / (1.0 + std::exp(-z)); });
}

std::pair<Eigen::MatrixXd, Eigen::VectorXd> encode(
    const EncoderBackend& backend, const std::vector<int>& tokens) {
  if (tokens.empty()) throw ConfigError("encode: empty token sequence");
  std::vector<int> in = tokens;
  auto cap = static_cast<std::size_t>(backend.max_length());
  if (in.size() > cap) in.resize(cap);
  Eigen::MatrixXd states = backend.encode_states(in);
  if (!states.allFinite()) throw TrainingError("encoder produced NaN/Inf states");
  return {states, states.row(0).transpose()};
}

// ---------------------------------------------------------------------------
// ToyEncoder

ToyEncoder::ToyEncoder(int vocab_size, int dim, int max_len, std::uint64_t seed)
    : vocab_size_(vocab_size), dim_(dim), max_len_(max_len) {
  if (vocab_size < 1 || dim < 1 || max_len < 1)
    throw ConfigError("ToyEncoder: vocab_size, dim, max_len must be positive");
  SplitRng root(seed);
  embed_ = Param("encoder.embed", vocab_size, dim);
  {
    auto rng = root.fork("embed");
    fill_uniform(embed_.value, rng, 0.1);
  }
  double r = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int b = 0; b < kBlocks; ++b) {
    Eigen::MatrixXd q(dim, dim), k(dim, dim), v(dim, dim);
    auto rq = root.fork("wq:" + std::to_string(b));
    auto rk = root.fork("wk:" + std::to_string(b));
    auto rv = root.fork("wv:" + std::to_string(b));
    fill_uniform(q, rq, r);
    fill_uniform(k, rk, r);
    fill_uniform(v, rv, r);
    wq_.push_back(std::move(q));
    wk_.push_back(std::move(k));
    wv_.push_back(std::move(v));
  }
  // Scaled to the embedding init radius so token identity is not drowned
  // out by the fixed position signal.
  positions_ = 0.1 * sinusoidal_positions(max_len, dim);
}

const Eigen::MatrixXd& ToyEncoder::block_weight(int block, int which) const {
  switch (which) {
    case 0: return wq_[static_cast<std::size_t>(block)];
    case 1: return wk_[static_cast<std::size_t>(block)];
    default: return wv_[static_cast<std::size_t>(block)];
  }
}

Eigen::MatrixXd ToyEncoder::forward(const std::vector<int>& tokens,
                                    Cache* cache) const {
  if (tokens.empty()) throw ConfigError("ToyEncoder: empty token sequence");
  auto t_len = static_cast<Eigen::Index>(
      std::min<std::size_t>(tokens.size(), static_cast<std::size_t>(max_len_)));
  Eigen::MatrixXd x(t_len, dim_);
  for (Eigen::Index t = 0; t < t_len; ++t) {
    int id = tokens[static_cast<std::size_t>(t)];
    if (id < 0 || id >= vocab_size_)
      throw ConfigError("ToyEncoder: token id " + std::to_string(id) +
                        " out of range");
    x.row(t) = embed_.value.row(id) + positions_.row(t);
  }
  if (cache) {
    cache->tokens.assign(tokens.begin(), tokens.begin() + t_len);
    cache->x.clear();
    cache->attn.clear();
    cache->values.clear();
    cache->th.clear();
    cache->x.push_back(x);
  }
  double scale = 1.0 / std::sqrt(static_cast<double>(dim_));
  for (int b = 0; b < kBlocks; ++b) {
    auto bi = static_cast<std::size_t>(b);
    Eigen::MatrixXd q = x * wq_[bi];
    Eigen::MatrixXd k = x * wk_[bi];
    Eigen::MatrixXd v = x * wv_[bi];
    Eigen::MatrixXd a = row_softmax(q * k.transpose() * scale);
    Eigen::MatrixXd th = (a * v).array().tanh().matrix();
    Eigen::MatrixXd y = x + th;
    if (cache) {
      cache->attn.push_back(a);
      cache->values.push_back(v);
      cache->th.push_back(th);
      cache->x.push_back(y);
    }
    x = std::move(y);
  }
  return x;
}

Eigen::MatrixXd ToyEncoder::encode_states(const std::vector<int>& tokens) const {
  return forward(tokens, nullptr);
}

void ToyEncoder::backward(const Cache& cache, const Eigen::MatrixXd& dstates) {
  double scale = 1.0 / std::sqrt(static_cast<double>(dim_));
  Eigen::MatrixXd dx = dstates;
  for (int b = kBlocks - 1; b >= 0; --b) {
    auto bi = static_cast<std::size_t>(b);
    const Eigen::MatrixXd& x = cache.x[bi];
    const Eigen::MatrixXd& a = cache.attn[bi];
    const Eigen::MatrixXd& v = cache.values[bi];
    const Eigen::MatrixXd& th = cache.th[bi];

    // y = x + tanh(a v); dpre is the gradient at the tanh argument.
    Eigen::MatrixXd dpre =
        (dx.array() * (1.0 - th.array().square())).matrix();
    Eigen::MatrixXd da = dpre * v.transpose();
    Eigen::MatrixXd dv = a.transpose() * dpre;

    // Softmax rows: ds_i = a_i o (da_i - (da_i . a_i)).
    Eigen::MatrixXd ds(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      double dot = da.row(i).dot(a.row(i));
      ds.row(i) = a.row(i).array() * (da.row(i).array() - dot);
    }
    Eigen::MatrixXd q = x * wq_[bi];
    Eigen::MatrixXd k = x * wk_[bi];
    Eigen::MatrixXd dq = ds * k * scale;
    Eigen::MatrixXd dk = ds.transpose() * q * scale;

    Eigen::MatrixXd dx_in = dx;  // residual path
    dx_in += dv * wv_[bi].transpose();
    dx_in += dq * wq_[bi].transpose();
    dx_in += dk * wk_[bi].transpose();
    dx = std::move(dx_in);
  }
  for (Eigen::Index t = 0; t < dx.rows(); ++t)
    embed_.grad.row(cache.tokens[static_cast<std::size_t>(t)]) += dx.row(t);
}

// ---------------------------------------------------------------------------
// BiLstm

BiLstm::BiLstm(int input_dim, int hidden_size, std::uint64_t seed)
    : input_(input_dim), hidden_(hidden_size) {
  if (input_dim < 1 || hidden_size < 1)
    throw ConfigError("BiLstm: dimensions must be positive");
  SplitRng root(seed);
  auto init = [&](Param& p, const char* name, Eigen::Index rows,
                  Eigen::Index cols, double radius) {
    p = Param(std::string("lstm.") + name, rows, cols);
    auto rng = root.fork(name);
    fill_uniform(p.value, rng, radius);
  };
  double rin = 1.0 / std::sqrt(static_cast<double>(input_dim));
  double rh = 1.0 / std::sqrt(static_cast<double>(hidden_size));
  init(wf_, "wf", 4 * hidden_, input_, rin);
  init(uf_, "uf", 4 * hidden_, hidden_, rh);
  init(bf_, "bf", 4 * hidden_, 1, 0.0);
  init(wb_, "wb", 4 * hidden_, input_, rin);
  init(ub_, "ub", 4 * hidden_, hidden_, rh);
  init(bb_, "bb", 4 * hidden_, 1, 0.0);
}

std::vector<Param*> BiLstm::params() {
  return {&wf_, &uf_, &bf_, &wb_, &ub_, &bb_};
}

namespace {

inline Eigen::VectorXd vsigmoid(const Eigen::VectorXd& z) {
  return z.unaryExpr([](double x) { return 1.0 / (1.0 + std::exp(-x)); });
}

}  // namespace

Eigen::MatrixXd BiLstm::forward(const Eigen::MatrixXd& states,
                                Cache* cache) const {
  Eigen::Index t_len = states.rows();
  if (t_len < 1) throw ConfigError("BiLstm: empty sequence");
  if (states.cols() != input_)
    throw ConfigError("BiLstm: input width mismatch");
  Eigen::MatrixXd out(t_len, 2 * hidden_);

  auto run = [&](const Param& w, const Param& u, const Param& b, bool reverse,
                 DirectionCache* dc) {
    Eigen::VectorXd h = Eigen::VectorXd::Zero(hidden_);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(hidden_);
    for (Eigen::Index step = 0; step < t_len; ++step) {
      Eigen::Index t = reverse ? t_len - 1 - step : step;
      Eigen::VectorXd z = w.value * states.row(t).transpose() + u.value * h +
                          b.value.col(0);
      Eigen::VectorXd gi = vsigmoid(z.segment(0, hidden_));
      Eigen::VectorXd gf = vsigmoid(z.segment(hidden_, hidden_));
      Eigen::VectorXd gg = z.segment(2 * hidden_, hidden_).array().tanh();
      Eigen::VectorXd go = vsigmoid(z.segment(3 * hidden_, hidden_));
      c = gf.cwiseProduct(c) + gi.cwiseProduct(gg);
      Eigen::VectorXd tc = c.array().tanh();
      h = go.cwiseProduct(tc);
      out.block(t, reverse ? hidden_ : 0, 1, hidden_) = h.transpose();
      if (dc) {
        dc->i.push_back(gi);
        dc->f.push_back(gf);
        dc->g.push_back(gg);
        dc->o.push_back(go);
        dc->c.push_back(c);
        dc->h.push_back(h);
        dc->tanh_c.push_back(tc);
      }
    }
  };
  if (cache) {
    cache->x = states;
    cache->fwd = DirectionCache{};
    cache->bwd = DirectionCache{};
  }
  run(wf_, uf_, bf_, false, cache ? &cache->fwd : nullptr);
  run(wb_, ub_, bb_, true, cache ? &cache->bwd : nullptr);
  return out;
}

Eigen::MatrixXd BiLstm::backward(const Cache& cache,
                                 const Eigen::MatrixXd& dout) {
  Eigen::Index t_len = cache.x.rows();
  Eigen::MatrixXd dx = Eigen::MatrixXd::Zero(t_len, input_);

  auto run = [&](Param& w, Param& u, Param& b, bool reverse,
                 const DirectionCache& dc, Eigen::Index out_col) {
    Eigen::VectorXd dh_next = Eigen::VectorXd::Zero(hidden_);
    Eigen::VectorXd dc_next = Eigen::VectorXd::Zero(hidden_);
    // dc.* are indexed by processing step, not timestep.
    for (Eigen::Index step = t_len - 1; step >= 0; --step) {
      Eigen::Index t = reverse ? t_len - 1 - step : step;
      auto si = static_cast<std::size_t>(step);
      Eigen::VectorXd dh =
          dout.block(t, out_col, 1, hidden_).transpose() + dh_next;
      const Eigen::VectorXd& gi = dc.i[si];
      const Eigen::VectorXd& gf = dc.f[si];
      const Eigen::VectorXd& gg = dc.g[si];
      const Eigen::VectorXd& go = dc.o[si];
      const Eigen::VectorXd& tc = dc.tanh_c[si];
      Eigen::VectorXd c_prev = step == 0 ? Eigen::VectorXd::Zero(hidden_)
                                         : dc.c[si - 1];
      Eigen::VectorXd h_prev = step == 0 ? Eigen::VectorXd::Zero(hidden_)
                                         : dc.h[si - 1];

      Eigen::VectorXd dcur =
          dh.cwiseProduct(go).cwiseProduct(
              (1.0 - tc.array().square()).matrix()) +
          dc_next;
      Eigen::VectorXd dgo = dh.cwiseProduct(tc);
      Eigen::VectorXd dgi = dcur.cwiseProduct(gg);
      Eigen::VectorXd dgg = dcur.cwiseProduct(gi);
      Eigen::VectorXd dgf = dcur.cwiseProduct(c_prev);

      Eigen::VectorXd dz(4 * hidden_);
      dz.segment(0, hidden_) =
          dgi.cwiseProduct(gi).cwiseProduct((1.0 - gi.array()).matrix());
      dz.segment(hidden_, hidden_) =
          dgf.cwiseProduct(gf).cwiseProduct((1.0 - gf.array()).matrix());
      dz.segment(2 * hidden_, hidden_) =
          dgg.cwiseProduct((1.0 - gg.array().square()).matrix());
      dz.segment(3 * hidden_, hidden_) =
          dgo.cwiseProduct(go).cwiseProduct((1.0 - go.array()).matrix());

      w.grad += dz * cache.x.row(t);
      u.grad += dz * h_prev.transpose();
      b.grad.col(0) += dz;
      dx.row(t) += (w.value.transpose() * dz).transpose();
      dh_next = u.value.transpose() * dz;
      dc_next = dcur.cwiseProduct(gf);
    }
  };
  run(wf_, uf_, bf_, false, cache.fwd, 0);
  run(wb_, ub_, bb_, true, cache.bwd, hidden_);
  return dx;
}

// ---------------------------------------------------------------------------
// AttnPool

AttnPool::AttnPool(int state_dim, int attn_size, std::uint64_t seed)
    : state_dim_(state_dim), attn_size_(attn_size) {
  if (state_dim < 1 || attn_size < 1)
    throw ConfigError("AttnPool: dimensions must be positive");
  SplitRng root(seed);
  w_ = Param("attn.w", attn_size, state_dim);
  v_ = Param("attn.v", attn_size, 1);
  auto rw = root.fork("w");
  auto rv = root.fork("v");
  fill_uniform(w_.value, rw, 1.0 / std::sqrt(static_cast<double>(state_dim)));
  fill_uniform(v_.value, rv, 1.0 / std::sqrt(static_cast<double>(attn_size)));
}

std::vector<Param*> AttnPool::params() { return {&w_, &v_}; }

Eigen::VectorXd AttnPool::forward(const Eigen::MatrixXd& states,
                                  Cache* cache) const {
  if (states.rows() < 1) throw ConfigError("AttnPool: empty sequence");
  if (states.cols() != state_dim_)
    throw ConfigError("AttnPool: state width mismatch");
  Eigen::MatrixXd th = (states * w_.value.transpose()).array().tanh().matrix();
  Eigen::VectorXd e = th * v_.value.col(0);
  Eigen::VectorXd alpha = softmax(e);
  Eigen::VectorXd out = states.transpose() * alpha;
  if (cache) {
    cache->h = states;
    cache->th = th;
    cache->alpha = alpha;
  }
  return out;
}

Eigen::MatrixXd AttnPool::backward(const Cache& cache,
                                   const Eigen::VectorXd& dout) {
  const Eigen::MatrixXd& h = cache.h;
  const Eigen::VectorXd& alpha = cache.alpha;
  Eigen::Index t_len = h.rows();

  Eigen::VectorXd dalpha = h * dout;
  Eigen::MatrixXd dh = alpha * dout.transpose();

  double dot = dalpha.dot(alpha);
  Eigen::VectorXd de =
      alpha.cwiseProduct((dalpha.array() - dot).matrix());

  // e = tanh(h W^T) v
  v_.grad.col(0) += cache.th.transpose() * de;
  Eigen::MatrixXd dth = de * v_.value.col(0).transpose();          // T x Ha
  Eigen::MatrixXd dpre =
      (dth.array() * (1.0 - cache.th.array().square())).matrix();  // T x Ha
  w_.grad += dpre.transpose() * h;
  dh += dpre * w_.value;
  (void)t_len;
  return dh;
}

// ---------------------------------------------------------------------------
// Linear

Linear::Linear(int in_dim, int out_dim, std::uint64_t seed) {
  if (in_dim < 1 || out_dim < 1)
    throw ConfigError("Linear: dimensions must be positive");
  SplitRng root(seed);
  w_ = Param("head.w", out_dim, in_dim);
  b_ = Param("head.b", out_dim, 1);
  auto rw = root.fork("w");
  fill_uniform(w_.value, rw, 1.0 / std::sqrt(static_cast<double>(in_dim)));
}

std::vector<Param*> Linear::params() { return {&w_, &b_}; }

Eigen::VectorXd Linear::forward(const Eigen::VectorXd& in) const {
  return w_.value * in + b_.value.col(0);
}

Eigen::VectorXd Linear::backward(const Eigen::VectorXd& in,
                                 const Eigen::VectorXd& dout) {
  w_.grad += dout * in.transpose();
  b_.grad.col(0) += dout;
  return w_.value.transpose() * dout;
}

// ---------------------------------------------------------------------------
// Losses

double weighted_cross_entropy(const std::vector<Eigen::VectorXd>& probs,
                              const std::vector<int>& targets,
                              std::size_t ns_count, std::size_t s_count) {
  if (probs.size() != targets.size())
    throw ConfigError("weighted_cross_entropy: probs/targets size mismatch");
  if (probs.empty()) throw ConfigError("weighted_cross_entropy: empty batch");
  if (ns_count == 0 || s_count == 0)
    throw ConfigError("weighted_cross_entropy: zero class count");
  double w_ns = 1.0 / static_cast<double>(ns_count);
  double w_s = 1.0 / static_cast<double>(s_count);
  double num = 0.0, denom = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    int y = targets[i];
    if (y != 0 && y != 1)
      throw ConfigError("weighted_cross_entropy: target must be 0 or 1");
    double w = y == 1 ? w_s : w_ns;
    double p = std::max(probs[i](y), kProbFloor);
    num += w * -std::log(p);
    denom += w;
  }
  return num / denom;
}

double multilabel_bce(const Eigen::VectorXd& probs, const LabelVector& target) {
  if (probs.size() != kNumLabels)
    throw ConfigError("multilabel_bce: expected 6 probabilities");
  double sum = 0.0;
  for (int l = 0; l < kNumLabels; ++l) {
    double p = std::min(std::max(probs(l), kProbFloor), 1.0 - kProbFloor);
    sum += target[l] ? -std::log(p) : -std::log(1.0 - p);
  }
  return sum / kNumLabels;
}

// ---------------------------------------------------------------------------
// SarcasmModel

std::pair<std::vector<int>, std::vector<int>> pair_truncate(
    std::vector<int> a, std::vector<int> b, int max_len) {
  auto budget = static_cast<std::size_t>(std::max(0, max_len - 3));
  while (a.size() + b.size() > budget) {
    if (a.size() >= b.size() && a.size() > 1)
      a.pop_back();
    else if (b.size() > 1)
      b.pop_back();
    else if (a.size() > 1)
      a.pop_back();
    else
      break;
  }
  return {std::move(a), std::move(b)};
}

SarcasmModel::SarcasmModel(const ModelSpec& spec) : spec_(spec) {
  if (spec.vocab_size < 1) throw ConfigError("SarcasmModel: vocab_size unset");
  SplitRng root(spec.seed);
  encoder_ = std::make_unique<ToyEncoder>(spec.vocab_size, spec.encoder_dim,
                                          spec.max_len,
                                          root.fork("encoder").seed());
  if (spec_.hierarchical) {
    lstm_ = std::make_unique<BiLstm>(spec.encoder_dim, spec.hier.hidden_size,
                                     root.fork("lstm").seed());
    if (spec_.hier.use_attention)
      attn_ = std::make_unique<AttnPool>(2 * spec.hier.hidden_size,
                                         spec.hier.attention_size,
                                         root.fork("attn").seed());
  }
  head_ = std::make_unique<Linear>(head_in_dim(), head_out(),
                                   root.fork("head").seed());
}

int SarcasmModel::head_out() const {
  return spec_.hier.head == HeadKind::multilabel_sigmoid ? kNumLabels : 2;
}

int SarcasmModel::head_in_dim() const {
  return spec_.hierarchical ? 2 * spec_.hier.hidden_size : spec_.encoder_dim;
}

Eigen::VectorXd SarcasmModel::logits(const std::vector<int>& tokens,
                                     Cache* cache) const {
  Cache local;
  Cache& c = cache ? *cache : local;
  Eigen::MatrixXd states = encoder_->forward(tokens, &c.enc);
  if (spec_.hierarchical) {
    Eigen::MatrixXd hs = lstm_->forward(states, &c.lstm);
    if (spec_.hier.use_attention) {
      c.head_in = attn_->forward(hs, &c.attn);
    } else {
      // [last forward state; last backward state]
      int h = spec_.hier.hidden_size;
      Eigen::VectorXd pooled(2 * h);
      pooled.head(h) = hs.block(hs.rows() - 1, 0, 1, h).transpose();
      pooled.tail(h) = hs.block(0, h, 1, h).transpose();
      c.head_in = pooled;
    }
  } else {
    c.head_in = states.row(0).transpose();
  }
  c.logits = head_->forward(c.head_in);
  if (!c.logits.allFinite())
    throw TrainingError("model produced non-finite logits");
  return c.logits;
}

Eigen::VectorXd SarcasmModel::pair_logits(const std::vector<int>& tokens_a,
                                          const std::vector<int>& tokens_b,
                                          Cache* cache) const {
  auto [a, b] = pair_truncate(tokens_a, tokens_b, spec_.max_len);
  std::vector<int> seq;
  seq.reserve(a.size() + b.size() + 3);
  seq.push_back(spec_.cls_id);
  seq.insert(seq.end(), a.begin(), a.end());
  seq.push_back(spec_.sep_id);
  seq.insert(seq.end(), b.begin(), b.end());
  seq.push_back(spec_.sep_id);
  return logits(seq, cache);
}

void SarcasmModel::backward(const Cache& cache, const Eigen::VectorXd& dlogits) {
  Eigen::VectorXd dpool = head_->backward(cache.head_in, dlogits);
  Eigen::MatrixXd dstates;
  if (spec_.hierarchical) {
    Eigen::MatrixXd dh;
    if (spec_.hier.use_attention) {
      dh = attn_->backward(cache.attn, dpool);
    } else {
      int h = spec_.hier.hidden_size;
      Eigen::Index t_len = cache.lstm.x.rows();
      dh = Eigen::MatrixXd::Zero(t_len, 2 * h);
      dh.block(t_len - 1, 0, 1, h) = dpool.head(h).transpose();
      dh.block(0, h, 1, h) = dpool.tail(h).transpose();
    }
    dstates = lstm_->backward(cache.lstm, dh);
  } else {
    dstates = Eigen::MatrixXd::Zero(cache.enc.x.back().rows(),
                                    spec_.encoder_dim);
    dstates.row(0) = dpool.transpose();
  }
  encoder_->backward(cache.enc, dstates);
}

Eigen::VectorXd SarcasmModel::forward_binary(
    const std::vector<int>& tokens) const {
  return softmax(logits(tokens, nullptr));
}

Eigen::VectorXd SarcasmModel::forward_multilabel(
    const std::vector<int>& tokens) const {
  return sigmoid(logits(tokens, nullptr));
}

Eigen::VectorXd SarcasmModel::forward_pair(
    const std::vector<int>& tokens_a, const std::vector<int>& tokens_b) const {
  return softmax(pair_logits(tokens_a, tokens_b, nullptr));
}

std::vector<Param*> SarcasmModel::params() {
  std::vector<Param*> out{&encoder_->embeddings()};
  if (lstm_) {
    auto lp = lstm_->params();
    out.insert(out.end(), lp.begin(), lp.end());
  }
  if (attn_) {
    auto ap = attn_->params();
    out.insert(out.end(), ap.begin(), ap.end());
  }
  auto hp = head_->params();
  out.insert(out.end(), hp.begin(), hp.end());
  return out;
}

void SarcasmModel::zero_grad() {
  for (Param* p : params()) p->zero_grad();
}

Eigen::VectorXd SarcasmModel::flat_params() const {
  auto* self = const_cast<SarcasmModel*>(this);
  std::size_t total = 0;
  for (Param* p : self->params()) total += static_cast<std::size_t>(p->value.size());
  Eigen::VectorXd flat(static_cast<Eigen::Index>(total));
  Eigen::Index at = 0;
  for (Param* p : self->params()) {
    flat.segment(at, p->value.size()) =
        Eigen::Map<const Eigen::VectorXd>(p->value.data(), p->value.size());
    at += p->value.size();
  }
  return flat;
}

void SarcasmModel::set_flat_params(const Eigen::VectorXd& flat) {
  Eigen::Index at = 0;
  for (Param* p : params()) {
    if (at + p->value.size() > flat.size())
      throw ConfigError("set_flat_params: parameter vector too short");
    Eigen::Map<Eigen::VectorXd>(p->value.data(), p->value.size()) =
        flat.segment(at, p->value.size());
    at += p->value.size();
  }
  if (at != flat.size())
    throw ConfigError("set_flat_params: parameter vector size mismatch");
}

Eigen::VectorXd SarcasmModel::flat_grads() const {
  auto* self = const_cast<SarcasmModel*>(this);
  std::size_t total = 0;
  for (Param* p : self->params()) total += static_cast<std::size_t>(p->grad.size());
  Eigen::VectorXd flat(static_cast<Eigen::Index>(total));
  Eigen::Index at = 0;
  for (Param* p : self->params()) {
    flat.segment(at, p->grad.size()) =
        Eigen::Map<const Eigen::VectorXd>(p->grad.data(), p->grad.size());
    at += p->grad.size();
  }
  return flat;
}

std::string SarcasmModel::to_checkpoint_json() const {
  json j;
  j["format"] = "sarckit-checkpoint";
  j["version"] = 1;
  j["spec"] = {{"vocab_size", spec_.vocab_size},
               {"encoder_dim", spec_.encoder_dim},
               {"max_len", spec_.max_len},
               {"hierarchical", spec_.hierarchical},
               {"hidden_size", spec_.hier.hidden_size},
               {"use_attention", spec_.hier.use_attention},
               {"attention_size", spec_.hier.attention_size},
               {"head", to_string(spec_.hier.head)},
               {"seed", spec_.seed},
               {"cls_id", spec_.cls_id},
               {"sep_id", spec_.sep_id}};
  json params = json::array();
  auto* self = const_cast<SarcasmModel*>(this);
  for (Param* p : self->params()) {
    json pj;
    pj["name"] = p->name;
    pj["rows"] = p->value.rows();
    pj["cols"] = p->value.cols();
    std::vector<double> data(p->value.data(),
                             p->value.data() + p->value.size());
    pj["data"] = data;
    params.push_back(std::move(pj));
  }
  j["params"] = std::move(params);
  return j.dump();
}

SarcasmModel SarcasmModel::from_checkpoint_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("checkpoint: invalid JSON: ") + e.what());
  }
  if (j.value("format", "") != "sarckit-checkpoint")
    throw ParseError("checkpoint: unknown format field");
  if (j.value("version", 0) != 1)
    throw ParseError("checkpoint: unsupported version");
  const json& s = j.at("spec");
  ModelSpec spec;
  spec.vocab_size = s.at("vocab_size").get<int>();
  spec.encoder_dim = s.at("encoder_dim").get<int>();
  spec.max_len = s.at("max_len").get<int>();
  spec.hierarchical = s.at("hierarchical").get<bool>();
  spec.hier.hidden_size = s.at("hidden_size").get<int>();
  spec.hier.use_attention = s.at("use_attention").get<bool>();
  spec.hier.attention_size = s.at("attention_size").get<int>();
  spec.hier.head = head_kind_from_string(s.at("head").get<std::string>());
  spec.seed = s.at("seed").get<std::uint64_t>();
  spec.cls_id = s.at("cls_id").get<int>();
  spec.sep_id = s.at("sep_id").get<int>();

  SarcasmModel model(spec);
  auto live = model.params();
  const json& params = j.at("params");
  if (params.size() != live.size())
    throw ParseError("checkpoint: parameter count mismatch");
  for (std::size_t i = 0; i < live.size(); ++i) {
    const json& pj = params[i];
    Param* p = live[i];
    if (pj.at("name").get<std::string>() != p->name)
      throw ParseError("checkpoint: parameter order mismatch at '" + p->name +
                       "'");
    auto rows = pj.at("rows").get<Eigen::Index>();
    auto cols = pj.at("cols").get<Eigen::Index>();
    if (rows != p->value.rows() || cols != p->value.cols())
      throw ParseError("checkpoint: shape mismatch for '" + p->name + "'");
    auto data = pj.at("data").get<std::vector<double>>();
    if (static_cast<Eigen::Index>(data.size()) != p->value.size())
      throw ParseError("checkpoint: data length mismatch for '" + p->name +
                       "'");
    Eigen::Map<Eigen::VectorXd>(p->value.data(), p->value.size()) =
        Eigen::Map<const Eigen::VectorXd>(data.data(),
                                          static_cast<Eigen::Index>(data.size()));
  }
  return model;
}

}  // namespace sarckit
