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

// EALT binary tensor files:
//
//   offset  size        field
//   0       4           magic "EALT"
//   4       1           version (1)
//   5       1           dtype (1 = float32, 2 = float64)
//   6       2           rank, little-endian
//   8       8 * rank    dimensions, little-endian u64
//   ...                 row-major little-endian payload

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "eala/numerics.hpp"

namespace eala {

enum class Dtype : std::uint8_t { f32 = 1, f64 = 2 };

inline constexpr std::uint8_t kTensorFileVersion = 1;

std::size_t dtype_width(Dtype d) noexcept;

/// Rank-2 encoding of `m`. Float32 payloads round each value to nearest.
std::vector<std::uint8_t> encode_tensor(const Matrix& m, Dtype dtype);

/// Accepts rank 1 (read as a single row) and rank 2. Errors: bad_magic,
/// bad_version, bad_dtype, bad_rank, truncated_payload, invalid_argument for
/// non-finite values.
Matrix decode_tensor(std::span<const std::uint8_t> bytes);

void write_tensor(const std::filesystem::path& path, const Matrix& m, Dtype dtype = Dtype::f64);
Matrix read_tensor(const std::filesystem::path& path);

}  // namespace eala
