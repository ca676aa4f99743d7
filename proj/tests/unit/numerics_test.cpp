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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "eala/numerics.hpp"
#include "test_util.hpp"

namespace eala {
namespace {

using testing::Rng;

TEST(Matmul, IdentityLeavesMatrixUnchanged) {
  Rng rng(1);
  const Matrix b = testing::uniform_matrix(rng, 3, 4);
  EXPECT_EQ(matmul(Matrix::identity(3), b), b);
}

TEST(Matmul, HandComputedOneByOne) {
  const Matrix a(1, 2, {1.0, 2.0});
  const Matrix b(2, 1, {3.0, 4.0});
  const Matrix c = matmul(a, b);
  ASSERT_EQ(c.rows(), 1u);
  ASSERT_EQ(c.cols(), 1u);
  EXPECT_EQ(c(0, 0), 11.0);
}

TEST(Matmul, MatchesTripleLoop) {
  Rng rng(2);
  const Matrix a = testing::uniform_matrix(rng, 5, 7);
  const Matrix b = testing::uniform_matrix(rng, 7, 3);
  const Matrix got = matmul(a, b);
  const Matrix want = testing::brute_matmul(a, b);
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got.data()[i], want.data()[i], 1e-12);
}

TEST(Matmul, DimensionMismatchIsAnError) {
  try {
    matmul(Matrix(2, 3), Matrix(2, 3));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::dimension_mismatch);
  }
}

TEST(Matmul, AssociativeWithinScaledTolerance) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const Matrix a = testing::uniform_matrix(rng, 8, 8, 10.0);
    const Matrix b = testing::uniform_matrix(rng, 8, 8, 10.0);
    const Matrix c = testing::uniform_matrix(rng, 8, 8, 10.0);
    const double bound =
        1e-9 * max_abs(a.data()) * max_abs(b.data()) * max_abs(c.data());
    EXPECT_LE(testing::max_abs_diff(matmul(matmul(a, b), c), matmul(a, matmul(b, c))), bound);
  }
}

TEST(Matrix, RejectsWrongDataLength) {
  EXPECT_THROW(Matrix(2, 2, Vector{1.0, 2.0, 3.0}), Error);
}

TEST(ProbVector, ValidatesEntries) {
  EXPECT_THROW(ProbVector(Vector{0.5, 0.6}), Error);
  EXPECT_THROW(ProbVector(Vector{1.5, -0.5}), Error);
  EXPECT_THROW(ProbVector(Vector{}), Error);
  const ProbVector p(Vector{0.25, 0.75});
  EXPECT_DOUBLE_EQ(p[1], 0.75);
}

TEST(Softmax, ZerosAreUniform) {
  const ProbVector p = softmax_row(Vector{0, 0, 0, 0});
  for (double v : p.values()) EXPECT_DOUBLE_EQ(v, 0.25);
}

TEST(Softmax, ShiftInvariant) {
  for (double t : {-700.0, -3.5, 0.0, 42.0, 900.0}) {
    const ProbVector p = softmax_row(Vector(5, t));
    for (double v : p.values()) EXPECT_NEAR(v, 0.2, 1e-15);
  }
}

TEST(Softmax, TwoPointValue) {
  const ProbVector p = softmax_row(Vector{0.1, -0.1});
  EXPECT_NEAR(p[0], 0.549834, 1e-6);
  EXPECT_NEAR(p[1], 0.450166, 1e-6);
}

TEST(Softmax, EmptyIsAnError) { EXPECT_THROW(softmax_row(Vector{}), Error); }

TEST(Softmax, StaysOnSimplexForLargeInputs) {
  Rng rng(4);
  for (int t = 0; t < 500; ++t) {
    Vector x(rng.range(1, 100));
    for (double& v : x) v = 1000.0 * rng.symmetric();
    const ProbVector p = softmax_row(x);
    double sum = 0.0;
    for (double v : p.values()) {
      EXPECT_GE(v, 0.0);
      sum += v;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(LogSumExp, Values) {
  EXPECT_NEAR(logsumexp(Vector{0, 0}), std::log(2.0), 1e-15);
  EXPECT_NEAR(logsumexp(Vector{1000, 1000}), 1000.0 + std::log(2.0), 1e-12);
  EXPECT_NEAR(logsumexp(Vector{0.1, -0.1}), 0.698139, 1e-6);
  EXPECT_THROW(logsumexp(Vector{}), Error);
}

TEST(LogSumExp, BoundedByMaxAndMaxPlusLogN) {
  Rng rng(5);
  for (int t = 0; t < 500; ++t) {
    Vector x(rng.range(1, 64));
    for (double& v : x) v = 50.0 * rng.symmetric();
    const double mx = *std::max_element(x.begin(), x.end());
    const double lse = logsumexp(x);
    EXPECT_GE(lse, mx);
    EXPECT_LE(lse, mx + std::log(static_cast<double>(x.size())) + 1e-12);
  }
}

TEST(Prng, SplitMixReferenceVector) {
  // Reference outputs of the public SplitMix64 implementation for seed 0.
  auto [first, s1] = prng_next(PrngState{0});
  auto [second, s2] = prng_next(s1);
  EXPECT_EQ(first, 0xe220a8397b1dcdafULL);
  EXPECT_EQ(second, 0x6e789e6aa1b965f4ULL);
  (void)s2;
}

TEST(Prng, SameSeedSameSequence) {
  PrngState a{12345};
  PrngState b{12345};
  for (int i = 0; i < 100; ++i) {
    auto [va, na] = prng_next(a);
    auto [vb, nb] = prng_next(b);
    ASSERT_EQ(va, vb);
    a = na;
    b = nb;
  }
}

TEST(Prng, DifferentSeedsDiffer) {
  EXPECT_EQ(prng_next(PrngState{1}).first, 0x910a2dec89025cc1ULL);
  EXPECT_EQ(prng_next(PrngState{2}).first, 0x975835de1c9756ceULL);
}

TEST(GaussianMatrix, ZeroScaleIsZero) {
  for (double v : gaussian_matrix(4, 5, 9, 0.0).data()) EXPECT_EQ(v, 0.0);
}

TEST(GaussianMatrix, Deterministic) {
  EXPECT_EQ(gaussian_matrix(6, 3, 77, 1.5), gaussian_matrix(6, 3, 77, 1.5));
  EXPECT_NE(gaussian_matrix(6, 3, 77, 1.5), gaussian_matrix(6, 3, 78, 1.5));
}

TEST(GaussianMatrix, MomentsOfUnitScale) {
  const Matrix m = gaussian_matrix(100, 100, 2024, 1.0);
  double mean = 0.0;
  for (double v : m.data()) mean += v;
  mean /= static_cast<double>(m.size());
  double var = 0.0;
  for (double v : m.data()) var += (v - mean) * (v - mean);
  var /= static_cast<double>(m.size() - 1);
  EXPECT_LT(std::abs(mean), 0.05);
  EXPECT_GE(var, 0.9);
  EXPECT_LE(var, 1.1);
  EXPECT_TRUE(m.all_finite());
}

TEST(GaussianMatrix, Errors) {
  EXPECT_THROW(gaussian_matrix(0, 3, 1, 1.0), Error);
  EXPECT_THROW(gaussian_matrix(3, 0, 1, 1.0), Error);
  EXPECT_THROW(gaussian_matrix(3, 3, 1, -1.0), Error);
}

}  // namespace
}  // namespace eala
