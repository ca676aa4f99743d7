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

#include "eala/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace eala {
namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(Errc::dimension_mismatch, std::string(what) + ": " + std::to_string(a) +
                                              " vs " + std::to_string(b));
  }
}

double xlogx(double x) noexcept { return x > 0.0 ? x * std::log(x) : 0.0; }

void require_centered(std::span<const double> a) {
  double sum = 0.0;
  double abs_sum = 0.0;
  for (double v : a) {
    sum += v;
    abs_sum += std::abs(v);
  }
  if (std::abs(sum) > 1e-9 * std::max(1.0, abs_sum)) {
    throw Error(Errc::invalid_argument,
                "scores are not centered (sum = " + std::to_string(sum) + ")");
  }
}

}  // namespace

AttnResult exact_attention(const Matrix& q, const Matrix& k, const Matrix& v,
                           ExactAttentionOptions opts) {
  require_same_size(q.cols(), k.cols(), "query/key feature dims");
  require_same_size(k.rows(), v.rows(), "key/value counts");
  if (k.rows() == 0) throw Error(Errc::empty_input, "attention over zero keys");

  Matrix scores = matmul(q, transpose(k));
  if (opts.scale_scores) {
    const double inv = 1.0 / std::sqrt(static_cast<double>(q.cols()));
    for (double& s : scores.data()) s *= inv;
  }

  AttnResult result;
  if (opts.keep_entropies) {
    Vector entropies(q.rows());
    for (std::size_t i = 0; i < q.rows(); ++i) entropies[i] = entropy_of_scores(scores.row(i));
    result.entropies = std::move(entropies);
  }
  for (std::size_t i = 0; i < scores.rows(); ++i) {
    auto row = scores.row(i);
    const ProbVector p = softmax_row(row);
    std::copy(p.values().begin(), p.values().end(), row.begin());
  }
  result.output = matmul(scores, v);
  if (opts.keep_weights) result.weights = std::move(scores);
  return result;
}

double shannon_entropy(std::span<const double> p) noexcept {
  double h = 0.0;
  for (double v : p) h -= xlogx(v);
  return h;
}

double shannon_entropy(const ProbVector& p) noexcept { return shannon_entropy(p.values()); }

double entropy_of_scores(std::span<const double> scores) {
  if (scores.empty()) throw Error(Errc::empty_input, "entropy over zero keys");
  const double shift = *std::max_element(scores.begin(), scores.end());
  double z = 0.0;
  double weighted = 0.0;
  for (double s : scores) {
    const double e = std::exp(s - shift);
    z += e;
    weighted += e * (s - shift);
  }
  // With b = s - max: H = log Z_b - sum_j p_j b_j.
  const double h = std::log(z) - weighted / z;
  return std::max(h, 0.0);
}

double exact_attention_entropy(std::span<const double> q, const Matrix& k) {
  require_same_size(q.size(), k.cols(), "query/key feature dims");
  if (k.rows() == 0) throw Error(Errc::empty_input, "entropy over zero keys");
  Vector scores(k.rows());
  for (std::size_t j = 0; j < k.rows(); ++j) scores[j] = dot(q, k.row(j));
  return entropy_of_scores(scores);
}

double printed_form_entropy_of_scores(std::span<const double> scores) {
  const ProbVector p = softmax_row(scores);
  double weighted = 0.0;
  for (std::size_t j = 0; j < scores.size(); ++j) weighted += p[j] * scores[j];
  return -weighted - logsumexp(scores);
}

double kl_divergence(const ProbVector& q, const ProbVector& p) {
  require_same_size(q.size(), p.size(), "distribution lengths");
  double kl = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0.0) continue;
    if (p[i] == 0.0) {
      throw Error(Errc::undefined_divergence,
                  "q[" + std::to_string(i) + "] > 0 where p[" + std::to_string(i) + "] = 0");
    }
    kl += q[i] * std::log(q[i] / p[i]);
  }
  return std::max(kl, 0.0);
}

KlDecomposition kl_decomposition(const ProbVector& q, const ProbVector& p) {
  KlDecomposition d;
  d.kl = kl_divergence(q, p);
  const double hq = shannon_entropy(q);
  const double hp = shannon_entropy(p);
  d.entropy_gap = hp - hq;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) d.cross_term += (p[i] - q[i]) * std::log(p[i]);
  }
  d.bound = std::abs(hq - hp) + std::abs(d.cross_term);
  return d;
}

LinearFamilyEntropy linear_family_entropy(std::span<const double> centered_scores, double theta) {
  if (!(theta > 0.0)) throw Error(Errc::invalid_argument, "theta must be positive");
  if (centered_scores.empty()) throw Error(Errc::empty_input, "linear family over zero keys");
  require_centered(centered_scores);

  const double n = static_cast<double>(centered_scores.size());
  Vector w(centered_scores.size());
  double total = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    w[j] = (1.0 + centered_scores[j] / theta) / n;
    if (!(w[j] > 0.0)) return {std::numeric_limits<double>::quiet_NaN(), false};
    total += w[j];
  }
  double h = 0.0;
  for (double x : w) h -= xlogx(x / total);
  return {h, true};
}

double bisection_theta(std::span<const double> centered_scores, double target_entropy,
                       BisectionOptions opts) {
  if (centered_scores.empty()) throw Error(Errc::empty_input, "bisection over zero keys");
  require_centered(centered_scores);
  const double spread = max_abs(centered_scores);
  if (spread == 0.0) {
    throw Error(Errc::invalid_argument, "all scores are zero; every theta gives log N");
  }
  const double log_n = std::log(static_cast<double>(centered_scores.size()));

  double lo = spread * (1.0 + 1e-9);
  double hi = spread * 1e9;
  const double h_lo = linear_family_entropy(centered_scores, lo).entropy;
  const double h_hi = linear_family_entropy(centered_scores, hi).entropy;

  if (!(target_entropy >= h_lo) || !(target_entropy < log_n)) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "target entropy " << target_entropy << " outside attainable interval [" << h_lo
        << ", " << log_n << ")";
    throw Error(Errc::unattainable_target, msg.str());
  }
  if (std::abs(h_lo - target_entropy) <= opts.tolerance) return lo;
  if (target_entropy >= h_hi) return hi;

  double mid = lo;
  for (int it = 0; it < opts.max_iterations; ++it) {
    mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double h = linear_family_entropy(centered_scores, mid).entropy;
    if (std::abs(h - target_entropy) <= opts.tolerance) return mid;
    if (h < target_entropy) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

double strict_concavity_check(const ProbVector& p, const ProbVector& q, double lambda) {
  require_same_size(p.size(), q.size(), "distribution lengths");
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(Errc::invalid_argument, "lambda must lie in [0, 1]");
  }
  Vector mix(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mix[i] = lambda * p[i] + (1.0 - lambda) * q[i];
  const double h_mix = shannon_entropy(std::span<const double>(mix));
  return h_mix - (lambda * shannon_entropy(p) + (1.0 - lambda) * shannon_entropy(q));
}

}  // namespace eala
