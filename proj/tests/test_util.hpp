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

// Brute-force reference computations used by the tests. Nothing here calls
// into the library code paths it is used to check.

#include <cmath>
#include <cstdint>
#include <vector>

#include "eala/numerics.hpp"

namespace eala::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t bits() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }
  double symmetric() { return 2.0 * uniform() - 1.0; }
  std::size_t range(std::size_t lo, std::size_t hi) { return lo + bits() % (hi - lo + 1); }

 private:
  std::uint64_t state_;
};

inline Matrix uniform_matrix(Rng& rng, std::size_t rows, std::size_t cols, double scale = 1.0) {
  Matrix m(rows, cols);
  for (double& v : m.data()) v = scale * rng.symmetric();
  return m;
}

inline std::vector<double> random_simplex(Rng& rng, std::size_t n, double floor = 1e-3) {
  std::vector<double> p(n);
  double sum = 0.0;
  for (double& v : p) sum += (v = floor + rng.uniform());
  for (double& v : p) v /= sum;
  return p;
}

inline Matrix brute_matmul(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      long double acc = 0.0L;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += (long double)a(i, k) * b(k, j);
      out(i, j) = static_cast<double>(acc);
    }
  return out;
}

inline double brute_dot(const Matrix& a, std::size_t i, const Matrix& b, std::size_t j) {
  long double acc = 0.0L;
  for (std::size_t c = 0; c < a.cols(); ++c) acc += (long double)a(i, c) * b(j, c);
  return static_cast<double>(acc);
}

inline std::vector<double> brute_softmax(const std::vector<double>& x) {
  long double mx = x[0];
  for (double v : x) mx = std::max<long double>(mx, v);
  long double z = 0.0L;
  for (double v : x) z += std::exp((long double)v - mx);
  std::vector<double> p;
  for (double v : x) p.push_back(static_cast<double>(std::exp((long double)v - mx) / z));
  return p;
}

inline double brute_entropy(const std::vector<double>& p) {
  long double h = 0.0L;
  for (double v : p)
    if (v > 0) h -= (long double)v * std::log((long double)v);
  return static_cast<double>(h);
}

/// Keys minus their column mean, by explicit loops.
inline Matrix brute_center(const Matrix& k) {
  Matrix out = k;
  for (std::size_t c = 0; c < k.cols(); ++c) {
    long double mean = 0.0L;
    for (std::size_t j = 0; j < k.rows(); ++j) mean += k(j, c);
    mean /= k.rows();
    for (std::size_t j = 0; j < k.rows(); ++j) out(j, c) = static_cast<double>(k(j, c) - mean);
  }
  return out;
}

inline double max_rel_diff(const Matrix& got, const Matrix& want) {
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < want.size(); ++i) {
    diff = std::max(diff, std::abs(got.data()[i] - want.data()[i]));
    scale = std::max(scale, std::abs(want.data()[i]));
  }
  return diff == 0.0 ? 0.0 : diff / std::max(scale, 1e-300);
}

inline double max_abs_diff(const Matrix& got, const Matrix& want) {
  double diff = 0.0;
  for (std::size_t i = 0; i < want.size(); ++i)
    diff = std::max(diff, std::abs(got.data()[i] - want.data()[i]));
  return diff;
}

}  // namespace eala::testing
