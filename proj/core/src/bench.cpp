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

#include "eala/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <new>
#include <set>
#include <string>

#include "eala/eala.hpp"
#include "eala/error.hpp"
#include "eala/oracle.hpp"

namespace eala {
namespace {

double time_once(BenchMode mode, const Matrix& q, const Matrix& k, const Matrix& v) {
  const auto start = std::chrono::steady_clock::now();
  double sink = 0.0;
  switch (mode) {
    case BenchMode::exact:
      sink = exact_attention(q, k, v).output(0, 0);
      break;
    case BenchMode::eala_linear:
      sink = eala_attention(q, k, v, {.path = ForwardPath::linear}).output(0, 0);
      break;
    case BenchMode::eala_quadratic:
      sink = eala_attention(q, k, v, {.path = ForwardPath::quadratic}).output(0, 0);
      break;
  }
  const auto stop = std::chrono::steady_clock::now();
  // Keeps the result observable so the pass cannot be elided.
  volatile double keep = sink;
  (void)keep;
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

std::string_view to_string(BenchMode mode) noexcept {
  switch (mode) {
    case BenchMode::exact: return "exact";
    case BenchMode::eala_linear: return "eala-linear";
    case BenchMode::eala_quadratic: return "eala-quadratic";
  }
  return "unknown";
}

std::optional<BenchMode> parse_bench_mode(std::string_view name) noexcept {
  for (BenchMode m : {BenchMode::exact, BenchMode::eala_linear, BenchMode::eala_quadratic}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::uint64_t AllocationModel::bytes(std::uint64_t n_val, std::uint64_t c_val) const noexcept {
  return sizeof(double) *
         (n2 * n_val * n_val + nc * n_val * c_val + c2 * c_val * c_val + n * n_val + c * c_val);
}

AllocationModel allocation_model(BenchMode mode) noexcept {
  switch (mode) {
    // scores (n x n), transposed keys, output
    case BenchMode::exact: return {.n2 = 1, .nc = 2};
    // centered keys, transposed keys, output; gram; key mean and sum;
    // entropies and thetas; weight matrix
    case BenchMode::eala_quadratic: return {.n2 = 1, .nc = 3, .c2 = 1, .n = 2, .c = 2};
    // centered keys, output; gram and KV; mean, key sum, value sum and
    // per-query projection; entropies and thetas
    case BenchMode::eala_linear: return {.nc = 2, .c2 = 2, .n = 2, .c = 4};
  }
  return {};
}

std::vector<BenchRecord> bench_sweep(BenchMode mode, std::span<const std::size_t> n_list,
                                     std::size_t c, const BenchOptions& opts) {
  if (c == 0) throw Error(Errc::invalid_argument, "bench needs c >= 1");
  if (opts.repeats == 0) throw Error(Errc::invalid_argument, "bench needs at least one repeat");
  if (!std::is_sorted(n_list.begin(), n_list.end())) {
    throw Error(Errc::invalid_argument, "n list must be ascending");
  }
  const AllocationModel model = allocation_model(mode);
  std::vector<BenchRecord> records;
  for (std::size_t n : n_list) {
    if (n == 0) throw Error(Errc::invalid_argument, "bench needs n >= 1");
    const std::uint64_t peak = model.bytes(n, c);
    if (peak > opts.max_bytes) {
      throw Error(Errc::resource_exhausted,
                  "n = " + std::to_string(n) + " needs " + std::to_string(peak) +
                      " bytes, limit is " + std::to_string(opts.max_bytes));
    }
    try {
      const double scale = 1.0 / std::sqrt(static_cast<double>(c));
      const Matrix q = gaussian_matrix(n, c, opts.seed * 3 + 1, scale);
      const Matrix k = gaussian_matrix(n, c, opts.seed * 3 + 2, scale);
      const Matrix v = gaussian_matrix(n, c, opts.seed * 3 + 3, 1.0);
      time_once(mode, q, k, v);  // warm-up
      std::vector<double> times;
      for (std::size_t r = 0; r < opts.repeats; ++r) times.push_back(time_once(mode, q, k, v));
      std::sort(times.begin(), times.end());
      const std::size_t mid = times.size() / 2;
      const double median =
          times.size() % 2 == 1 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
      records.push_back({mode, n, c, std::max(median, 1e-9), peak});
    } catch (const std::bad_alloc&) {
      throw Error(Errc::resource_exhausted, "allocation failed at n = " + std::to_string(n));
    }
  }
  return records;
}

double fit_loglog_slope(std::span<const double> n, std::span<const double> time) {
  if (n.size() != time.size()) throw Error(Errc::dimension_mismatch, "n and time lengths differ");
  if (std::set<double>(n.begin(), n.end()).size() < 3) {
    throw Error(Errc::invalid_argument, "slope fit needs at least 3 distinct sizes");
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!(n[i] > 0.0) || !(time[i] > 0.0)) {
      throw Error(Errc::invalid_argument, "slope fit needs positive sizes and times");
    }
    mx += std::log(n[i]);
    my += std::log(time[i]);
  }
  mx /= static_cast<double>(n.size());
  my /= static_cast<double>(n.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double dx = std::log(n[i]) - mx;
    sxy += dx * (std::log(time[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

double fit_loglog_slope(std::span<const BenchRecord> records) {
  std::vector<double> n;
  std::vector<double> t;
  for (const BenchRecord& r : records) {
    n.push_back(static_cast<double>(r.n));
    t.push_back(r.wall_time);
  }
  return fit_loglog_slope(n, t);
}

}  // namespace eala
