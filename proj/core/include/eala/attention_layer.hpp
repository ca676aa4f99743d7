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
#include <span>

#include "eala/eala.hpp"
#include "eala/numerics.hpp"

namespace eala {

/// Self-attention layer parameters. All projections are model_dim x model_dim;
/// head h owns columns [h * head_dim, (h + 1) * head_dim) of the query, key
/// and value projections and the matching rows of the output projection.
struct MhaParams {
  std::size_t heads = 0;
  std::size_t model_dim = 0;
  Matrix w_query;
  Matrix w_key;
  Matrix w_value;
  Matrix w_output;
  std::uint64_t seed = 0;

  std::size_t head_dim() const noexcept { return heads == 0 ? 0 : model_dim / heads; }
};

enum class AttentionMode { exact, eala };

/// Normal(0, 1 / model_dim) projections derived from `seed`.
MhaParams mha_init(std::size_t model_dim, std::size_t heads, std::uint64_t seed);

/// Projects `x` (N x model_dim), attends per head with the chosen mode,
/// concatenates the heads and applies the output projection.
Matrix mha_forward(const MhaParams& params, const Matrix& x, AttentionMode mode,
                   const EalaConfig& cfg = {});

/// Reorders heads: new head h is old head order[h]. The layer output is
/// unchanged by this transformation.
MhaParams permute_heads(const MhaParams& params, std::span<const std::size_t> order);

}  // namespace eala
