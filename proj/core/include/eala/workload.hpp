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
#include <cstdint>

#include "eala/numerics.hpp"

namespace eala {

struct WorkloadSpec {
  std::size_t n = 64;
  std::size_t c = 16;
  double score_scale = 0.1;  // target max |q_i . k-hat_j|
  std::uint64_t seed = 0;

  void validate() const;
};

struct Workload {
  Matrix q;
  Matrix k;
  Matrix v;
};

/// Gaussian Q, K, V drawn from `spec.seed`; Q and K are then rescaled by a
/// common factor so the largest centered score equals `spec.score_scale`.
Workload gen_workload(const WorkloadSpec& spec);

/// max_{i,j} |q_i . (k_j - k-bar)|. Above `exact_limit` queries only the first
/// `exact_limit` query rows are scanned.
double max_centered_score(const Matrix& q, const Matrix& k, std::size_t exact_limit = 4096);

}  // namespace eala
