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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eala/eala.hpp"
#include "eala/workload.hpp"

namespace eala {

struct QueryFidelity {
  double entropy_exact = 0.0;
  double entropy_approx = 0.0;
  double theta_closed = 0.0;             // kUniformTheta for uniform weights
  std::optional<double> theta_bisection;  // absent when n is large or unattainable
  std::optional<double> kl_exact_vs_eala;  // absent when a linear weight is <= 0
  bool argsort_match = false;
};

/// Aggregates for one entropy source.
struct SourceSummary {
  double mean_kl = 0.0;  // over queries with valid (positive) linear weights
  double max_kl = 0.0;
  std::size_t invalid_weight_queries = 0;
  double argsort_match_rate = 0.0;
  double output_max_rel_error = 0.0;
  double mean_theta_rel_gap = 0.0;  // vs bisection, over queries that have one
  double max_theta_rel_gap = 0.0;
};

struct FidelityReport {
  WorkloadSpec spec;
  EntropySource entropy_source = EntropySource::approx;
  std::vector<QueryFidelity> queries;  // under `entropy_source`
  double mean_entropy_error = 0.0;     // |approx - exact|
  double max_entropy_error = 0.0;
  SourceSummary approx;
  SourceSummary exact;

  const SourceSummary& selected() const noexcept {
    return entropy_source == EntropySource::exact ? exact : approx;
  }
};

inline constexpr std::size_t kBisectionMaxN = 1024;

/// True when ordering `weights` agrees with ordering `scores`: along the
/// score-sorted order every step whose score gap exceeds `tie_tolerance`
/// strictly increases the weight. Near-ties are not compared.
bool same_ranking(std::span<const double> scores, std::span<const double> weights,
                  double tie_tolerance = 1e-12);

/// Runs exact softmax attention and the linear pipeline under both entropy
/// sources on explicit inputs.
FidelityReport compare_inputs(const Matrix& q, const Matrix& k, const Matrix& v,
                              EntropySource source, const WorkloadSpec& spec = {});

FidelityReport compare(const WorkloadSpec& spec, EntropySource source = EntropySource::approx);

}  // namespace eala
