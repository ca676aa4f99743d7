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

#include "eala/attention_layer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eala/oracle.hpp"

namespace eala {
namespace {

Matrix column_block(const Matrix& m, std::size_t first, std::size_t width) {
  Matrix out(m.rows(), width);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto src = m.row(r).subspan(first, width);
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  return out;
}

void check_params(const MhaParams& p) {
  if (p.heads == 0 || p.model_dim == 0 || p.model_dim % p.heads != 0) {
    throw Error(Errc::invalid_argument, "model_dim " + std::to_string(p.model_dim) +
                                            " is not divisible by heads " +
                                            std::to_string(p.heads));
  }
  for (const Matrix* w : {&p.w_query, &p.w_key, &p.w_value, &p.w_output}) {
    if (w->rows() != p.model_dim || w->cols() != p.model_dim) {
      throw Error(Errc::dimension_mismatch, "projection is not model_dim x model_dim");
    }
  }
}

}  // namespace

MhaParams mha_init(std::size_t model_dim, std::size_t heads, std::uint64_t seed) {
  if (heads == 0 || model_dim == 0 || model_dim % heads != 0) {
    throw Error(Errc::invalid_argument, "model_dim " + std::to_string(model_dim) +
                                            " is not divisible by heads " +
                                            std::to_string(heads));
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(model_dim));
  PrngState state{seed};
  auto next_seed = [&state] {
    auto [value, next] = prng_next(state);
    state = next;
    return value;
  };
  MhaParams p;
  p.heads = heads;
  p.model_dim = model_dim;
  p.seed = seed;
  p.w_query = gaussian_matrix(model_dim, model_dim, next_seed(), scale);
  p.w_key = gaussian_matrix(model_dim, model_dim, next_seed(), scale);
  p.w_value = gaussian_matrix(model_dim, model_dim, next_seed(), scale);
  p.w_output = gaussian_matrix(model_dim, model_dim, next_seed(), scale);
  return p;
}

Matrix mha_forward(const MhaParams& params, const Matrix& x, AttentionMode mode,
                   const EalaConfig& cfg) {
  check_params(params);
  if (x.cols() != params.model_dim) {
    throw Error(Errc::dimension_mismatch, "input has " + std::to_string(x.cols()) +
                                              " columns, layer expects " +
                                              std::to_string(params.model_dim));
  }
  const Matrix q = matmul(x, params.w_query);
  const Matrix k = matmul(x, params.w_key);
  const Matrix v = matmul(x, params.w_value);
  const std::size_t d = params.head_dim();

  Matrix concat(x.rows(), params.model_dim);
  for (std::size_t h = 0; h < params.heads; ++h) {
    const std::size_t first = h * d;
    const Matrix qh = column_block(q, first, d);
    const Matrix kh = column_block(k, first, d);
    const Matrix vh = column_block(v, first, d);
    const AttnResult r = mode == AttentionMode::exact
                             ? exact_attention(qh, kh, vh, {.scale_scores = cfg.scale_scores})
                             : eala_attention(qh, kh, vh, cfg);
    for (std::size_t i = 0; i < x.rows(); ++i) {
      auto src = r.output.row(i);
      std::copy(src.begin(), src.end(), concat.row(i).begin() + static_cast<std::ptrdiff_t>(first));
    }
  }
  return matmul(concat, params.w_output);
}

MhaParams permute_heads(const MhaParams& params, std::span<const std::size_t> order) {
  check_params(params);
  if (order.size() != params.heads) {
    throw Error(Errc::dimension_mismatch, "head order must list every head once");
  }
  const std::size_t d = params.head_dim();
  MhaParams out = params;
  for (std::size_t h = 0; h < params.heads; ++h) {
    const std::size_t src = order[h];
    if (src >= params.heads) throw Error(Errc::invalid_argument, "head index out of range");
    for (std::size_t r = 0; r < params.model_dim; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        out.w_query(r, h * d + c) = params.w_query(r, src * d + c);
        out.w_key(r, h * d + c) = params.w_key(r, src * d + c);
        out.w_value(r, h * d + c) = params.w_value(r, src * d + c);
      }
    }
    for (std::size_t c = 0; c < d; ++c) {
      auto from = params.w_output.row(src * d + c);
      std::copy(from.begin(), from.end(), out.w_output.row(h * d + c).begin());
    }
  }
  return out;
}

}  // namespace eala
