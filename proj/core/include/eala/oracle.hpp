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

// Exact softmax attention and the information-theoretic ground truth that the
// linear approximation is measured against.

#include <optional>
#include <span>

#include "eala/numerics.hpp"

namespace eala {

struct AttnResult {
  Matrix output;                  // N x Cv
  std::optional<Matrix> weights;  // N x N, row i is a distribution over keys
  std::optional<Vector> entropies;
  std::optional<Vector> thetas;   // only set by the linear pipeline
};

struct ExactAttentionOptions {
  bool keep_weights = false;
  bool keep_entropies = false;
  bool scale_scores = false;  // divide scores by sqrt(C)
};

AttnResult exact_attention(const Matrix& q, const Matrix& k, const Matrix& v,
                           ExactAttentionOptions opts = {});

/// -sum p_i log p_i in nats, with 0 log 0 = 0.
double shannon_entropy(const ProbVector& p) noexcept;
double shannon_entropy(std::span<const double> p) noexcept;

/// Entropy of softmax(scores) as logsumexp(scores) - sum_j p_j * scores_j.
double entropy_of_scores(std::span<const double> scores);

/// Entropy of softmax over q . k_j for every key row of `k`.
double exact_attention_entropy(std::span<const double> q, const Matrix& k);

/// The uncorrected "-sum p a - logsumexp" expansion. It is negative for any
/// non-trivial input and is kept only for diagnostics.
double printed_form_entropy_of_scores(std::span<const double> scores);

/// sum q_i log(q_i / p_i). Throws undefined_divergence when q_i > 0 = p_i.
double kl_divergence(const ProbVector& q, const ProbVector& p);

struct KlDecomposition {
  double kl = 0.0;
  double entropy_gap = 0.0;  // H(p) - H(q)
  double cross_term = 0.0;   // sum (p_i - q_i) log p_i
  double bound = 0.0;        // |H(q) - H(p)| + |cross_term|
};

/// KL(q || p) = (H(p) - H(q)) + sum (p_i - q_i) log p_i.
KlDecomposition kl_decomposition(const ProbVector& q, const ProbVector& p);

struct LinearFamilyEntropy {
  double entropy;  // NaN when !valid
  bool valid;
};

/// Entropy of the weights (1 + a_j / theta) / N for centered scores `a`.
/// The weights are a distribution only when all of them are positive.
LinearFamilyEntropy linear_family_entropy(std::span<const double> centered_scores, double theta);

struct BisectionOptions {
  double tolerance = 1e-10;
  int max_iterations = 400;
};

/// Solves linear_family_entropy(a, theta) == target for theta on
/// [max|a| (1 + 1e-9), 1e9 max|a|], where the entropy is increasing in theta.
double bisection_theta(std::span<const double> centered_scores, double target_entropy,
                       BisectionOptions opts = {});

/// H(l p + (1 - l) q) - [l H(p) + (1 - l) H(q)].
double strict_concavity_check(const ProbVector& p, const ProbVector& q, double lambda);

}  // namespace eala
