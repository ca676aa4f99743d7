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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace eala {

enum class BenchMode { exact, eala_linear, eala_quadratic };

std::string_view to_string(BenchMode mode) noexcept;
std::optional<BenchMode> parse_bench_mode(std::string_view name) noexcept;

/// Auxiliary doubles allocated by one forward pass, as a polynomial in the
/// sequence length n and feature dim c. Inputs are not counted.
struct AllocationModel {
  std::uint64_t n2 = 0;
  std::uint64_t nc = 0;
  std::uint64_t c2 = 0;
  std::uint64_t n = 0;
  std::uint64_t c = 0;

  std::uint64_t bytes(std::uint64_t n_val, std::uint64_t c_val) const noexcept;
};

AllocationModel allocation_model(BenchMode mode) noexcept;

struct BenchRecord {
  BenchMode mode = BenchMode::exact;
  std::size_t n = 0;
  std::size_t c = 0;
  double wall_time = 0.0;  // seconds, median over repeats
  std::uint64_t analytic_peak_bytes = 0;
};

struct BenchOptions {
  std::size_t repeats = 5;
  std::uint64_t seed = 0;
  std::uint64_t max_bytes = std::uint64_t{4} << 30;
};

/// Times one forward pass per n (warm-up discarded, median of `repeats`).
/// Throws resource_exhausted, naming n, when the allocation model exceeds
/// opts.max_bytes or the allocation fails.
std::vector<BenchRecord> bench_sweep(BenchMode mode, std::span<const std::size_t> n_list,
                                     std::size_t c, const BenchOptions& opts = {});

/// Least-squares slope of log(time) against log(n).
double fit_loglog_slope(std::span<const BenchRecord> records);
double fit_loglog_slope(std::span<const double> n, std::span<const double> time);

}  // namespace eala
