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

#include "eala/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace eala {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, Vector data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw Error(Errc::dimension_mismatch,
                "matrix data has " + std::to_string(data_.size()) + " values, expected " +
                    std::to_string(rows * cols));
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool Matrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

ProbVector::ProbVector(Vector p) : p_(std::move(p)) {
  if (p_.empty()) throw Error(Errc::empty_input, "probability vector is empty");
  double sum = 0.0;
  for (double v : p_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(Errc::invalid_argument, "probability entries must be finite and nonnegative");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(Errc::invalid_argument,
                "probability entries sum to " + std::to_string(sum) + ", not 1");
  }
  for (double& v : p_) v /= sum;
}

ProbVector ProbVector::normalized(std::span<const double> weights) {
  if (weights.empty()) throw Error(Errc::empty_input, "weight vector is empty");
  double sum = 0.0;
  for (double v : weights) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(Errc::invalid_argument, "weights must be finite and nonnegative");
    }
    sum += v;
  }
  if (!(sum > 0.0)) throw Error(Errc::invalid_argument, "weights sum to zero");
  Vector p(weights.begin(), weights.end());
  for (double& v : p) v /= sum;
  return ProbVector(std::move(p), Trusted{});
}

ProbVector ProbVector::uniform(std::size_t n) {
  if (n == 0) throw Error(Errc::empty_input, "uniform distribution over zero outcomes");
  return ProbVector(Vector(n, 1.0 / static_cast<double>(n)), Trusted{});
}

std::pair<std::uint64_t, PrngState> prng_next(PrngState s) noexcept {
  s.state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = s.state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return {z ^ (z >> 31), s};
}

std::pair<double, PrngState> prng_uniform(PrngState s) noexcept {
  auto [bits, next] = prng_next(s);
  return {static_cast<double>(bits >> 11) * 0x1.0p-53, next};
}

std::pair<double, PrngState> prng_normal(PrngState s) noexcept {
  auto [u1, s1] = prng_uniform(s);
  auto [u2, s2] = prng_uniform(s1);
  // 1 - u1 lies in (0, 1], keeping the logarithm finite.
  const double radius = std::sqrt(-2.0 * std::log(1.0 - u1));
  return {radius * std::cos(2.0 * std::numbers::pi * u2), s2};
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(Errc::dimension_mismatch,
                "matmul " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  // i-k-j order: every out(i, j) still accumulates over k in ascending order.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out_row = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      auto b_row = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out_row[j] += aik * b_row[j];
    }
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  double acc = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double max_abs(std::span<const double> x) noexcept {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

ProbVector softmax_row(std::span<const double> x) {
  if (x.empty()) throw Error(Errc::empty_input, "softmax of an empty vector");
  const double shift = *std::max_element(x.begin(), x.end());
  Vector p(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) p[i] = std::exp(x[i] - shift);
  return ProbVector::normalized(p);
}

double logsumexp(std::span<const double> x) {
  if (x.empty()) throw Error(Errc::empty_input, "logsumexp of an empty vector");
  const double shift = *std::max_element(x.begin(), x.end());
  double sum = 0.0;
  for (double v : x) sum += std::exp(v - shift);
  return shift + std::log(sum);
}

Matrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed, double scale) {
  if (rows == 0 || cols == 0) throw Error(Errc::empty_input, "gaussian matrix with zero extent");
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    throw Error(Errc::invalid_argument, "gaussian scale must be finite and nonnegative");
  }
  Matrix m(rows, cols);
  PrngState state{seed};
  for (double& v : m.data()) {
    auto [z, next] = prng_normal(state);
    v = scale * z;
    state = next;
  }
  return m;
}

Vector column_mean(const Matrix& a) {
  Vector mean(a.cols(), 0.0);
  if (a.rows() == 0) return mean;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) mean[j] += r[j];
  }
  for (double& v : mean) v /= static_cast<double>(a.rows());
  return mean;
}

}  // namespace eala
