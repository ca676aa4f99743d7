// Copyright 2026 The EALA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eala/eala.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace eala {
namespace {

void require_dims(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::dimension_mismatch, what);
}

void check_forward_inputs(const Matrix& q, const Matrix& k, const Matrix& v,
                          std::span<const double> theta) {
  require_dims(q.cols() == k.cols(), "query and key feature dims differ");
  require_dims(k.rows() == v.rows(), "key and value counts differ");
  require_dims(theta.size() == q.rows(), "one theta per query required");
  if (k.rows() == 0) throw Error(Errc::empty_input, "attention over zero keys");
  for (double t : theta) {
    if (!(t > 0.0)) throw Error(Errc::invalid_argument, "theta entries must be positive");
  }
}

double inverse_theta(double theta) noexcept { return std::isinf(theta) ? 0.0 : 1.0 / theta; }

}  // namespace

void EalaConfig::validate() const {
  if (!(epsilon > 0.0)) throw Error(Errc::invalid_argument, "epsilon must be positive");
  if (!(denom_floor > 0.0)) throw Error(Errc::invalid_argument, "denom_floor must be positive");
}

CenteredKeys center_keys(const Matrix& k) {
  if (k.rows() == 0 || k.cols() == 0) throw Error(Errc::empty_input, "no keys to center");
  CenteredKeys out{k, column_mean(k)};
  for (std::size_t j = 0; j < k.rows(); ++j) {
    auto row = out.keys.row(j);
    for (std::size_t c = 0; c < k.cols(); ++c) row[c] -= out.mean[c];
  }
  return out;
}

KeyMoments key_moments(const Matrix& centered_keys, std::span<const double> mean) {
  const std::size_t c = centered_keys.cols();
  KeyMoments m;
  m.count = centered_keys.rows();
  m.mean = mean.empty() ? Vector(c, 0.0) : Vector(mean.begin(), mean.end());
  m.key_sum_centered.assign(c, 0.0);
  m.gram = Matrix(c, c);
  for (std::size_t j = 0; j < centered_keys.rows(); ++j) {
    auto kj = centered_keys.row(j);
    for (std::size_t a = 0; a < c; ++a) {
      m.key_sum_centered[a] += kj[a];
      auto g = m.gram.row(a);
      for (std::size_t b = a; b < c; ++b) g[b] += kj[a] * kj[b];
    }
  }
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < a; ++b) m.gram(a, b) = m.gram(b, a);
  return m;
}

ScoreMoments score_moments(std::span<const double> q, const KeyMoments& m) {
  require_dims(q.size() == m.gram.rows(), "query dim does not match key moments");
  ScoreMoments sm;
  sm.s1 = dot(q, m.key_sum_centered);
  for (std::size_t a = 0; a < q.size(); ++a) sm.s2 += q[a] * dot(m.gram.row(a), q);
  return sm;
}

double approx_entropy(const ScoreMoments& sm, std::size_t n, bool clamp) {
  if (n == 0) throw Error(Errc::empty_input, "entropy over zero keys");
  const double nd = static_cast<double>(n);
  const double z = nd + sm.s1;
  if (!(z > 0.0)) {
    throw Error(Errc::domain_error, "n + S1 = " + std::to_string(z) + " is not positive");
  }
  const double h = std::log(z) - (sm.s1 + sm.s2) / z;
  if (!clamp) return h;
  return std::clamp(h, 0.0, std::log(nd));
}

double theta_star(double s2, double entropy, std::size_t n, const EalaConfig& cfg) {
  if (n == 0) throw Error(Errc::empty_input, "theta over zero keys");
  const double log_n = std::log(static_cast<double>(n));
  constexpr double slack = 1e-12;
  if (!cfg.clamp_entropy && (entropy < -slack || entropy > log_n + slack)) {
    throw Error(Errc::domain_error, "entropy " + std::to_string(entropy) +
                                        " outside [0, log n] with clamping disabled");
  }
  entropy = std::clamp(entropy, 0.0, log_n);
  const double gap = log_n - entropy;
  if (s2 <= cfg.denom_floor || gap <= cfg.denom_floor) return kUniformTheta;
  return std::sqrt(s2 / (2.0 * static_cast<double>(n) * gap)) + cfg.epsilon;
}

Matrix eala_forward_quadratic(const Matrix& q, const Matrix& centered_keys, const Matrix& v,
                              std::span<const double> theta) {
  check_forward_inputs(q, centered_keys, v, theta);
  const double inv_n = 1.0 / static_cast<double>(centered_keys.rows());
  Matrix weights = matmul(q, transpose(centered_keys));
  for (std::size_t i = 0; i < weights.rows(); ++i) {
    const double inv = inverse_theta(theta[i]);
    for (double& w : weights.row(i)) w = (1.0 + w * inv) * inv_n;
  }
  return matmul(weights, v);
}

Matrix eala_forward_linear(const Matrix& q, const Matrix& centered_keys, const Matrix& v,
                           std::span<const double> theta) {
  check_forward_inputs(q, centered_keys, v, theta);
  const std::size_t c = centered_keys.cols();
  const std::size_t cv = v.cols();
  const double inv_n = 1.0 / static_cast<double>(centered_keys.rows());

  Matrix kv(c, cv);
  Vector v_sum(cv, 0.0);
  for (std::size_t j = 0; j < centered_keys.rows(); ++j) {
    auto kj = centered_keys.row(j);
    auto vj = v.row(j);
    for (std::size_t b = 0; b < cv; ++b) v_sum[b] += vj[b];
    for (std::size_t a = 0; a < c; ++a) {
      auto kv_row = kv.row(a);
      for (std::size_t b = 0; b < cv; ++b) kv_row[b] += kj[a] * vj[b];
    }
  }

  Matrix out(q.rows(), cv);
  Vector projected(cv);
  for (std::size_t i = 0; i < q.rows(); ++i) {
    const double inv = inverse_theta(theta[i]);
    auto qi = q.row(i);
    std::fill(projected.begin(), projected.end(), 0.0);
    for (std::size_t a = 0; a < c; ++a) {
      auto kv_row = kv.row(a);
      for (std::size_t b = 0; b < cv; ++b) projected[b] += qi[a] * kv_row[b];
    }
    auto oi = out.row(i);
    for (std::size_t b = 0; b < cv; ++b) oi[b] = (v_sum[b] + inv * projected[b]) * inv_n;
  }
  return out;
}

bool prefers_quadratic(std::size_t n, std::size_t c) noexcept { return c > n; }

AttnResult eala_attention(const Matrix& q, const Matrix& k, const Matrix& v,
                          const EalaConfig& cfg) {
  cfg.validate();
  require_dims(q.cols() == k.cols(), "query and key feature dims differ");
  require_dims(k.rows() == v.rows(), "key and value counts differ");

  Matrix scaled_q;
  const Matrix* queries = &q;
  if (cfg.scale_scores) {
    scaled_q = q;
    const double inv = 1.0 / std::sqrt(static_cast<double>(q.cols()));
    for (double& x : scaled_q.data()) x *= inv;
    queries = &scaled_q;
  }

  const CenteredKeys centered = center_keys(k);
  const KeyMoments moments = key_moments(centered.keys, centered.mean);
  const std::size_t n = k.rows();

  Vector entropies(queries->rows());
  ThetaVector thetas(queries->rows());
  for (std::size_t i = 0; i < queries->rows(); ++i) {
    auto qi = queries->row(i);
    const ScoreMoments sm = score_moments(qi, moments);
    entropies[i] = cfg.entropy_source == EntropySource::exact
                       ? exact_attention_entropy(qi, centered.keys)
                       : approx_entropy(sm, n, cfg.clamp_entropy);
    thetas[i] = theta_star(sm.s2, entropies[i], n, cfg);
  }

  bool quadratic = false;
  switch (cfg.path) {
    case ForwardPath::automatic: quadratic = prefers_quadratic(n, q.cols()); break;
    case ForwardPath::quadratic: quadratic = true; break;
    case ForwardPath::linear: quadratic = false; break;
  }

  AttnResult result;
  result.output = quadratic ? eala_forward_quadratic(*queries, centered.keys, v, thetas)
                            : eala_forward_linear(*queries, centered.keys, v, thetas);
  result.entropies = std::move(entropies);
  result.thetas = std::move(thetas);
  return result;
}

Vector eala_weights(std::span<const double> centered_scores, double theta) {
  if (centered_scores.empty()) throw Error(Errc::empty_input, "weights over zero keys");
  if (!(theta > 0.0)) throw Error(Errc::invalid_argument, "theta must be positive");
  const double inv = inverse_theta(theta);
  const double inv_n = 1.0 / static_cast<double>(centered_scores.size());
  Vector w(centered_scores.size());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = (1.0 + centered_scores[j] * inv) * inv_n;
  return w;
}

}  // namespace eala
