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
#include <utility>
#include <vector>

#include "eala/error.hpp"

namespace eala {

using Vector = std::vector<double>;

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  /// Takes ownership of `data`; throws dimension_mismatch when
  /// data.size() != rows * cols.
  Matrix(std::size_t rows, std::size_t cols, Vector data);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<const double> data() const& noexcept { return data_; }
  std::span<double> data() & noexcept { return data_; }
  // A temporary hands over its storage instead of a view that would dangle.
  Vector data() && noexcept { return std::move(data_); }

  bool all_finite() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

/// A point on the probability simplex: nonnegative entries summing to one.
class ProbVector {
 public:
  /// Validates `p` (finite, nonnegative, |sum - 1| <= 1e-9) and rescales it so
  /// that |sum - 1| <= 1e-12 holds afterwards.
  explicit ProbVector(Vector p);

  /// Normalizes an arbitrary nonnegative, non-zero weight vector.
  static ProbVector normalized(std::span<const double> weights);
  static ProbVector uniform(std::size_t n);

  std::size_t size() const noexcept { return p_.size(); }
  double operator[](std::size_t i) const noexcept { return p_[i]; }
  std::span<const double> values() const noexcept { return p_; }

 private:
  struct Trusted {};
  ProbVector(Vector p, Trusted) : p_(std::move(p)) {}

  Vector p_;
};

struct PrngState {
  std::uint64_t state = 0;
};

/// One SplitMix64 step. Returns the output and the advanced state.
std::pair<std::uint64_t, PrngState> prng_next(PrngState s) noexcept;

/// Uniform double in [0, 1) from the top 53 bits of the next draw.
std::pair<double, PrngState> prng_uniform(PrngState s) noexcept;

/// Standard-normal draws via Box-Muller, two uniforms per value.
std::pair<double, PrngState> prng_normal(PrngState s) noexcept;

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

double dot(std::span<const double> a, std::span<const double> b) noexcept;

ProbVector softmax_row(std::span<const double> x);
double logsumexp(std::span<const double> x);

/// i.i.d. normal(0, scale^2) entries, fully determined by `seed`.
Matrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed, double scale);

/// Column means, length a.cols().
Vector column_mean(const Matrix& a);

double max_abs(std::span<const double> x) noexcept;

}  // namespace eala
