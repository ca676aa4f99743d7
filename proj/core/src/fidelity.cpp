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

#include "eala/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eala/oracle.hpp"

namespace eala {
namespace {

double row_rel_error(std::span<const double> got, std::span<const double> want) {
  double diff = 0.0;
  double norm = 0.0;
  for (std::size_t i = 0; i < want.size(); ++i) {
    diff += (got[i] - want[i]) * (got[i] - want[i]);
    norm += want[i] * want[i];
  }
  if (diff == 0.0) return 0.0;
  return std::sqrt(diff) / std::max(std::sqrt(norm), 1e-300);
}

struct SourceRun {
  SourceSummary summary;
  std::vector<QueryFidelity> queries;
};

SourceRun run_source(const Matrix& q, const Matrix& k, const Matrix& v, const Matrix& scores,
                     const AttnResult& exact, EntropySource source, bool with_bisection) {
  EalaConfig cfg;
  cfg.entropy_source = source;
  const AttnResult approx = eala_attention(q, k, v, cfg);
  const Vector& thetas = *approx.thetas;
  const Matrix& softmax = *exact.weights;

  SourceRun run;
  run.queries.resize(q.rows());
  std::size_t valid = 0;
  std::size_t matched = 0;
  std::size_t with_theta = 0;
  for (std::size_t i = 0; i < q.rows(); ++i) {
    QueryFidelity& f = run.queries[i];
    auto a = scores.row(i);
    f.theta_closed = thetas[i];

    const Vector w = eala_weights(a, thetas[i]);
    if (std::all_of(w.begin(), w.end(), [](double x) { return x > 0.0; })) {
      const double kl = kl_divergence(ProbVector(Vector(softmax.row(i).begin(), softmax.row(i).end())),
                                      ProbVector::normalized(w));
      f.kl_exact_vs_eala = kl;
      run.summary.mean_kl += kl;
      run.summary.max_kl = std::max(run.summary.max_kl, kl);
      ++valid;
    } else {
      ++run.summary.invalid_weight_queries;
    }
    f.argsort_match = same_ranking(a, w) && same_ranking(a, softmax.row(i));
    matched += f.argsort_match ? 1 : 0;

    if (with_bisection && max_abs(a) > 0.0) {
      try {
        f.theta_bisection = bisection_theta(a, (*exact.entropies)[i]);
      } catch (const Error& e) {
        if (e.code() != Errc::unattainable_target) throw;
      }
    }
    if (f.theta_bisection && std::isfinite(f.theta_closed)) {
      const double gap = std::abs(f.theta_closed - *f.theta_bisection) / *f.theta_bisection;
      run.summary.mean_theta_rel_gap += gap;
      run.summary.max_theta_rel_gap = std::max(run.summary.max_theta_rel_gap, gap);
      ++with_theta;
    }
    run.summary.output_max_rel_error = std::max(
        run.summary.output_max_rel_error, row_rel_error(approx.output.row(i), exact.output.row(i)));
  }
  if (valid > 0) run.summary.mean_kl /= static_cast<double>(valid);
  if (with_theta > 0) run.summary.mean_theta_rel_gap /= static_cast<double>(with_theta);
  run.summary.argsort_match_rate =
      q.rows() == 0 ? 1.0 : static_cast<double>(matched) / static_cast<double>(q.rows());
  return run;
}

}  // namespace

bool same_ranking(std::span<const double> scores, std::span<const double> weights,
                  double tie_tolerance) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return scores[x] < scores[y]; });
  for (std::size_t t = 1; t < order.size(); ++t) {
    const std::size_t lo = order[t - 1];
    const std::size_t hi = order[t];
    if (scores[hi] - scores[lo] > tie_tolerance && !(weights[hi] > weights[lo])) return false;
  }
  return true;
}

FidelityReport compare_inputs(const Matrix& q, const Matrix& k, const Matrix& v,
                              EntropySource source, const WorkloadSpec& spec) {
  const AttnResult exact = exact_attention(q, k, v, {.keep_weights = true, .keep_entropies = true});
  const CenteredKeys centered = center_keys(k);
  const KeyMoments moments = key_moments(centered.keys, centered.mean);
  const Matrix scores = matmul(q, transpose(centered.keys));
  const bool with_bisection = k.rows() <= kBisectionMaxN;

  FidelityReport report;
  report.spec = spec;
  report.entropy_source = source;

  SourceRun approx = run_source(q, k, v, scores, exact, EntropySource::approx, with_bisection);
  SourceRun exact_run = run_source(q, k, v, scores, exact, EntropySource::exact, with_bisection);
  report.approx = approx.summary;
  report.exact = exact_run.summary;
  report.queries = std::move(source == EntropySource::exact ? exact_run.queries : approx.queries);

  for (std::size_t i = 0; i < q.rows(); ++i) {
    QueryFidelity& f = report.queries[i];
    f.entropy_exact = (*exact.entropies)[i];
    f.entropy_approx = approx_entropy(score_moments(q.row(i), moments), k.rows(), true);
    const double err = std::abs(f.entropy_approx - f.entropy_exact);
    report.mean_entropy_error += err;
    report.max_entropy_error = std::max(report.max_entropy_error, err);
  }
  if (q.rows() > 0) report.mean_entropy_error /= static_cast<double>(q.rows());
  return report;
}

FidelityReport compare(const WorkloadSpec& spec, EntropySource source) {
  const Workload w = gen_workload(spec);
  return compare_inputs(w.q, w.k, w.v, source, spec);
}

}  // namespace eala
