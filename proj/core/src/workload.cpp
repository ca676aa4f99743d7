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

#include "eala/workload.hpp"

#include <algorithm>
#include <cmath>

#include "eala/eala.hpp"

namespace eala {

void WorkloadSpec::validate() const {
  if (n == 0 || c == 0) throw Error(Errc::invalid_argument, "workload needs n >= 1 and c >= 1");
  if (!(score_scale >= 0.0) || !std::isfinite(score_scale)) {
    throw Error(Errc::invalid_argument, "score_scale must be finite and nonnegative");
  }
}

double max_centered_score(const Matrix& q, const Matrix& k, std::size_t exact_limit) {
  const CenteredKeys centered = center_keys(k);
  const std::size_t rows = std::min(q.rows(), exact_limit);
  double m = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    auto qi = q.row(i);
    for (std::size_t j = 0; j < centered.keys.rows(); ++j) {
      m = std::max(m, std::abs(dot(qi, centered.keys.row(j))));
    }
  }
  return m;
}

Workload gen_workload(const WorkloadSpec& spec) {
  spec.validate();
  PrngState state{spec.seed};
  auto next_seed = [&state] {
    auto [value, next] = prng_next(state);
    state = next;
    return value;
  };
  Workload w{gaussian_matrix(spec.n, spec.c, next_seed(), 1.0),
             gaussian_matrix(spec.n, spec.c, next_seed(), 1.0),
             gaussian_matrix(spec.n, spec.c, next_seed(), 1.0)};

  if (spec.score_scale == 0.0) {
    for (double& x : w.q.data()) x = 0.0;
    return w;
  }
  const double measured = max_centered_score(w.q, w.k);
  if (measured == 0.0) return w;  // n == 1: every centered score is zero
  // Scores are bilinear in (Q, K); scaling both by f scales scores by f^2.
  const double f = std::sqrt(spec.score_scale / measured);
  for (double& x : w.q.data()) x *= f;
  for (double& x : w.k.data()) x *= f;
  return w;
}

}  // namespace eala
