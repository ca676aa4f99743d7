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

#include "eala/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "eala/attention_layer.hpp"
#include "eala/eala.hpp"
#include "eala/fidelity.hpp"
#include "eala/oracle.hpp"
#include "eala/tensor_file.hpp"
#include "eala/workload.hpp"

namespace eala {
namespace {

// Small stateful wrapper over the pure SplitMix64 step.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_{seed} {}
  std::uint64_t bits() {
    auto [v, next] = prng_next(state_);
    state_ = next;
    return v;
  }
  double uniform() {
    auto [v, next] = prng_uniform(state_);
    state_ = next;
    return v;
  }
  std::size_t range(std::size_t lo, std::size_t hi) { return lo + bits() % (hi - lo + 1); }

 private:
  PrngState state_;
};

ProbVector random_simplex(Rng& rng, std::size_t n) {
  Vector w(n);
  for (double& x : w) x = 1e-3 + rng.uniform();
  return ProbVector::normalized(w);
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

double norm_inf(const Matrix& m) { return max_abs(m.data()); }

double rel_diff(const Matrix& a, const Matrix& b) {
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a.data()[i] - b.data()[i]));
  }
  return diff / std::max(norm_inf(b), 1e-300);
}

using Check = std::function<CheckResult(Rng&)>;

CheckResult matmul_associativity(Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Matrix a = gaussian_matrix(8, 8, rng.bits(), 1.0);
    const Matrix b = gaussian_matrix(8, 8, rng.bits(), 1.0);
    const Matrix c = gaussian_matrix(8, 8, rng.bits(), 1.0);
    const Matrix left = matmul(matmul(a, b), c);
    const Matrix right = matmul(a, matmul(b, c));
    double diff = 0.0;
    for (std::size_t i = 0; i < left.size(); ++i)
      diff = std::max(diff, std::abs(left.data()[i] - right.data()[i]));
    worst = std::max(worst, diff / (norm_inf(a) * norm_inf(b) * norm_inf(c)));
  }
  return {"matmul associativity", worst <= 1e-9, "worst scaled residual " + fmt(worst)};
}

CheckResult softmax_simplex(Rng& rng) {
  for (int t = 0; t < 200; ++t) {
    Vector x(rng.range(1, 64));
    for (double& v : x) v = (rng.uniform() - 0.5) * 2000.0;
    const ProbVector p = softmax_row(x);
    double sum = 0.0;
    for (double v : p.values()) {
      if (v < 0.0) return {"softmax on simplex", false, "negative entry"};
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) return {"softmax on simplex", false, "sum " + fmt(sum)};
    const double lse = logsumexp(x);
    const double mx = *std::max_element(x.begin(), x.end());
    if (lse < mx || lse > mx + std::log(static_cast<double>(x.size())) + 1e-12) {
      return {"softmax on simplex", false, "logsumexp outside [max, max + log n]"};
    }
  }
  return {"softmax on simplex", true, "200 inputs up to magnitude 1e3"};
}

CheckResult prng_reproducible(Rng& rng) {
  const std::uint64_t seed = rng.bits();
  const bool same = gaussian_matrix(9, 7, seed, 1.0) == gaussian_matrix(9, 7, seed, 1.0);
  return {"prng reproducibility", same, "seed " + std::to_string(seed)};
}

CheckResult entropy_range_and_gibbs(Rng& rng) {
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = rng.range(2, 64);
    const ProbVector p = random_simplex(rng, n);
    const ProbVector q = random_simplex(rng, n);
    const double h = shannon_entropy(p);
    if (h < 0.0 || h > std::log(static_cast<double>(n)) + 1e-12) {
      return {"entropy range and Gibbs", false, "entropy " + fmt(h) + " out of range"};
    }
    if (kl_divergence(q, p) < 0.0 || kl_divergence(p, p) != 0.0) {
      return {"entropy range and Gibbs", false, "KL sign"};
    }
  }
  return {"entropy range and Gibbs", true, "500 pairs"};
}

CheckResult kl_identity_and_bound(Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = rng.range(2, 64);
    const KlDecomposition d = kl_decomposition(random_simplex(rng, n), random_simplex(rng, n));
    worst = std::max(worst, std::abs(d.kl - (d.entropy_gap + d.cross_term)));
    if (d.kl > d.bound + 1e-10) return {"KL identity and bound", false, "bound violated"};
  }
  return {"KL identity and bound", worst <= 1e-10, "worst residual " + fmt(worst)};
}

CheckResult concavity(Rng& rng) {
  double least = INFINITY;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = rng.range(2, 64);
    const ProbVector p = random_simplex(rng, n);
    const ProbVector q = random_simplex(rng, n);
    double gap = 0.0;
    for (std::size_t i = 0; i < n; ++i) gap = std::max(gap, std::abs(p[i] - q[i]));
    if (gap <= 1e-3) continue;
    least = std::min(least, strict_concavity_check(p, q, rng.uniform()));
  }
  return {"strict concavity", least > 0.0, "smallest margin " + fmt(least)};
}

CheckResult exact_entropy_forms(Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    Vector a(rng.range(1, 64));
    const double scale = 20.0 * rng.uniform();
    for (double& v : a) v = (2.0 * rng.uniform() - 1.0) * scale;
    worst = std::max(worst, std::abs(entropy_of_scores(a) - shannon_entropy(softmax_row(a))));
  }
  return {"log-sum-exp entropy form", worst <= 1e-10, "worst difference " + fmt(worst)};
}

CheckResult linear_family_monotone(Rng& rng) {
  for (int t = 0; t < 50; ++t) {
    Vector a(rng.range(2, 32));
    for (double& v : a) v = rng.uniform() - 0.5;
    const double mean = std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(a.size());
    for (double& v : a) v -= mean;
    const double lo = max_abs(a) * 1.001;
    double prev = -INFINITY;
    for (int g = 0; g < 40; ++g) {
      const auto r = linear_family_entropy(a, lo * std::pow(1.5, g));
      if (!r.valid || !(r.entropy > prev)) {
        return {"linear family monotone in theta", false, "non-increasing step"};
      }
      prev = r.entropy;
    }
  }
  return {"linear family monotone in theta", true, "50 score vectors, 40-point grid"};
}

CheckResult gram_identity(Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Matrix k = gaussian_matrix(rng.range(1, 128), rng.range(1, 32), rng.bits(), 1.0);
    const CenteredKeys ck = center_keys(k);
    const KeyMoments m = key_moments(ck.keys, ck.mean);
    const Matrix qs = gaussian_matrix(5, k.cols(), rng.bits(), 1.0);
    for (std::size_t i = 0; i < qs.rows(); ++i) {
      double brute = 0.0;
      for (std::size_t j = 0; j < ck.keys.rows(); ++j) {
        const double s = dot(qs.row(i), ck.keys.row(j));
        brute += s * s;
      }
      const double s2 = score_moments(qs.row(i), m).s2;
      if (brute > 0.0) worst = std::max(worst, std::abs(s2 - brute) / brute);
    }
  }
  return {"Gram identity", worst <= 1e-10, "worst relative error " + fmt(worst)};
}

CheckResult branch_equivalence(Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = rng.range(4, 96);
    const std::size_t c = rng.range(2, 48);
    const Matrix q = gaussian_matrix(n, c, rng.bits(), 0.3);
    const Matrix k = gaussian_matrix(n, c, rng.bits(), 0.3);
    const Matrix v = gaussian_matrix(n, c, rng.bits(), 1.0);
    const Matrix quad = eala_attention(q, k, v, {.path = ForwardPath::quadratic}).output;
    const Matrix lin = eala_attention(q, k, v, {.path = ForwardPath::linear}).output;
    worst = std::max(worst, rel_diff(lin, quad));
  }
  return {"branch equivalence", worst <= 1e-9, "worst relative difference " + fmt(worst)};
}

CheckResult weight_normalization(Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = rng.range(2, 64);
    const Matrix k = gaussian_matrix(n, 8, rng.bits(), 1.0);
    const CenteredKeys ck = center_keys(k);
    const Matrix q = gaussian_matrix(1, 8, rng.bits(), 1.0);
    Vector a(n);
    for (std::size_t j = 0; j < n; ++j) a[j] = dot(q.row(0), ck.keys.row(j));
    const Vector w = eala_weights(a, 0.1 + 10.0 * rng.uniform());
    worst = std::max(worst, std::abs(std::accumulate(w.begin(), w.end(), 0.0) - 1.0));
  }
  return {"weight normalization", worst <= 1e-9, "worst deviation " + fmt(worst)};
}

CheckResult shift_invariance(Rng& rng) {
  const Matrix q = gaussian_matrix(24, 6, rng.bits(), 0.3);
  const Matrix k = gaussian_matrix(24, 6, rng.bits(), 0.3);
  const Matrix v = gaussian_matrix(24, 6, rng.bits(), 1.0);
  const Matrix shift = gaussian_matrix(1, 6, rng.bits(), 5.0);
  Matrix shifted = k;
  for (std::size_t j = 0; j < k.rows(); ++j)
    for (std::size_t c = 0; c < k.cols(); ++c) shifted(j, c) += shift(0, c);
  const double d = rel_diff(eala_attention(q, shifted, v).output, eala_attention(q, k, v).output);
  return {"key shift invariance", d <= 1e-9, "relative difference " + fmt(d)};
}

CheckResult ranking_and_theta(Rng& rng) {
  const FidelityReport r =
      compare({.n = 64, .c = 16, .score_scale = 0.1, .seed = rng.bits()}, EntropySource::exact);
  const bool ok = r.exact.argsort_match_rate == 1.0 && r.exact.max_theta_rel_gap <= 0.05 &&
                  r.exact.mean_kl <= 0.01 && r.exact.invalid_weight_queries == 0;
  return {"ranking, theta and KL fidelity", ok,
          "theta gap " + fmt(r.exact.max_theta_rel_gap) + ", mean KL " + fmt(r.exact.mean_kl)};
}

CheckResult tensor_round_trip(Rng& rng) {
  const Matrix m = gaussian_matrix(7, 5, rng.bits(), 1.0);
  const bool ok = decode_tensor(encode_tensor(m, Dtype::f64)) == m &&
                  encode_tensor(Matrix(2, 2), Dtype::f64).size() == 56;
  return {"tensor file round trip", ok, "7x5 float64"};
}

CheckResult head_permutation(Rng& rng) {
  const MhaParams p = mha_init(16, 4, rng.bits());
  const std::size_t order[] = {2, 0, 3, 1};
  const MhaParams permuted = permute_heads(p, order);
  const Matrix x = gaussian_matrix(12, 16, rng.bits(), 0.5);
  double worst = 0.0;
  for (AttentionMode mode : {AttentionMode::exact, AttentionMode::eala}) {
    const Matrix a = mha_forward(p, x, mode);
    const Matrix b = mha_forward(permuted, x, mode);
    for (std::size_t i = 0; i < a.size(); ++i)
      worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  }
  return {"head permutation", worst <= 1e-10, "max difference " + fmt(worst)};
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(std::uint64_t seed) {
  const Check checks[] = {
      matmul_associativity, softmax_simplex,  prng_reproducible,      entropy_range_and_gibbs,
      kl_identity_and_bound, concavity,       exact_entropy_forms,    linear_family_monotone,
      gram_identity,         branch_equivalence, weight_normalization, shift_invariance,
      ranking_and_theta,     tensor_round_trip, head_permutation,
  };
  Rng rng(seed);
  std::vector<CheckResult> results;
  for (const Check& check : checks) {
    try {
      results.push_back(check(rng));
    } catch (const std::exception& e) {
      results.push_back({"(check threw)", false, e.what()});
    }
  }
  return results;
}

}  // namespace eala
