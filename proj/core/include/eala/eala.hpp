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

#pragma once

// Entropy-equal linear attention.
//
// Keys are centered, then each query's softmax entropy is estimated from two
// key-level summaries (the centered key sum and the C x C Gram matrix) without
// forming individual scores. A per-query temperature theta is chosen so that
// the normalized linear weights (1 + q.k_j / theta) / N carry the same
// entropy, and the output is evaluated either score-by-score in O(N^2 C) or
// through the reassociated key-value summary in O(N C^2).

#include <cstddef>
#include <limits>
#include <span>

#include "eala/numerics.hpp"
#include "eala/oracle.hpp"

namespace eala {

enum class EntropySource { approx, exact };
enum class ForwardPath { automatic, quadratic, linear };

struct EalaConfig {
  double epsilon = 1e-8;
  EntropySource entropy_source = EntropySource::approx;
  ForwardPath path = ForwardPath::automatic;
  double denom_floor = 1e-12;
  bool clamp_entropy = true;
  bool scale_scores = false;  // divide scores by sqrt(C), off by default

  /// Throws invalid_argument unless epsilon > 0 and denom_floor > 0.
  void validate() const;
};

/// theta == +inf stands for "uniform weights" (1 / theta treated as 0).
inline constexpr double kUniformTheta = std::numeric_limits<double>::infinity();

using ThetaVector = Vector;

struct CenteredKeys {
  Matrix keys;  // k_j - mean
  Vector mean;
};

struct KeyMoments {
  Vector mean;              // k-bar
  Vector key_sum_centered;  // sum_j k-hat_j
  Matrix gram;              // sum_j k-hat_j^T k-hat_j
  std::size_t count = 0;
};

struct ScoreMoments {
  double s1 = 0.0;  // sum_j q . k-hat_j
  double s2 = 0.0;  // sum_j (q . k-hat_j)^2
};

CenteredKeys center_keys(const Matrix& k);

/// Single pass over the centered keys; O(N C^2).
KeyMoments key_moments(const Matrix& centered_keys, std::span<const double> mean = {});

/// O(C^2) per query; never touches individual keys.
ScoreMoments score_moments(std::span<const double> q, const KeyMoments& m);

/// Second-order truncation of the softmax entropy in terms of the score
/// moments: log(n + S1) - (S1 + S2) / (n + S1). Clamped to [0, log n] when
/// `clamp` is set.
double approx_entropy(const ScoreMoments& sm, std::size_t n, bool clamp = true);

/// sqrt(s2 / (2 n (log n - entropy))) + epsilon, or kUniformTheta when either
/// s2 or the entropy gap falls under cfg.denom_floor.
double theta_star(double s2, double entropy, std::size_t n, const EalaConfig& cfg = {});

/// o_i = sum_j (1 + q_i . k-hat_j / theta_i) v_j / N. Materializes the N x N
/// weight matrix; weights are not clipped at zero.
Matrix eala_forward_quadratic(const Matrix& q, const Matrix& centered_keys, const Matrix& v,
                              std::span<const double> theta);

/// o_i = (sum_j v_j + (q_i / theta_i) KV) / N with KV = sum_j k-hat_j^T v_j.
Matrix eala_forward_linear(const Matrix& q, const Matrix& centered_keys, const Matrix& v,
                           std::span<const double> theta);

/// True when the O(N^2 C) evaluation is the cheaper one (C > N).
bool prefers_quadratic(std::size_t n, std::size_t c) noexcept;

/// Full pipeline: center, moments, entropy, theta, forward. The result carries
/// per-query entropies and thetas.
AttnResult eala_attention(const Matrix& q, const Matrix& k, const Matrix& v,
                          const EalaConfig& cfg = {});

/// Normalized linear weights for one query, (1 + a_j / theta) / N. Used by
/// diagnostics; the forward paths never build this per query.
Vector eala_weights(std::span<const double> centered_scores, double theta);

}  // namespace eala
