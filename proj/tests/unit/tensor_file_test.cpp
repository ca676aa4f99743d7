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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "eala/tensor_file.hpp"
#include "test_util.hpp"

namespace eala {
namespace {

using testing::Rng;

Errc decode_error(std::vector<std::uint8_t> bytes) {
  try {
    decode_tensor(bytes);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "decode succeeded";
  return Errc::io_error;
}

TEST(TensorFile, Float64RoundTripIsBitExact) {
  Rng rng(60);
  const Matrix m = testing::uniform_matrix(rng, 7, 5, 1e3);
  EXPECT_EQ(decode_tensor(encode_tensor(m, Dtype::f64)), m);
}

TEST(TensorFile, Float32RoundTripKeepsSinglePrecision) {
  Rng rng(61);
  for (int t = 0; t < 20; ++t) {
    const Matrix m = testing::uniform_matrix(rng, rng.range(1, 9), rng.range(1, 9), 100.0);
    const Matrix back = decode_tensor(encode_tensor(m, Dtype::f32));
    ASSERT_EQ(back.rows(), m.rows());
    for (std::size_t i = 0; i < m.size(); ++i)
      EXPECT_EQ(back.data()[i], static_cast<double>(static_cast<float>(m.data()[i])));
  }
}

TEST(TensorFile, LayoutOfTwoByTwo) {
  const auto bytes = encode_tensor(Matrix(2, 2, {1, 2, 3, 4}), Dtype::f64);
  ASSERT_EQ(bytes.size(), 56u);  // 4 + 1 + 1 + 2 + 2 * 8 + 4 * 8
  const std::vector<std::uint8_t> header{0x45, 0x41, 0x4C, 0x54, 1, 2, 2, 0,
                                         2, 0, 0, 0, 0, 0, 0, 0,
                                         2, 0, 0, 0, 0, 0, 0, 0};
  EXPECT_TRUE(std::equal(header.begin(), header.end(), bytes.begin()));
  // 1.0 = 0x3FF0000000000000, little-endian.
  const std::vector<std::uint8_t> one{0, 0, 0, 0, 0, 0, 0xF0, 0x3F};
  EXPECT_TRUE(std::equal(one.begin(), one.end(), bytes.begin() + 24));
}

TEST(TensorFile, RankOneIsASingleRow) {
  std::vector<std::uint8_t> bytes{0x45, 0x41, 0x4C, 0x54, 1, 1, 1, 0, 3, 0, 0, 0, 0, 0, 0, 0};
  for (float f : {1.5f, -2.0f, 0.25f}) {
    const auto u = std::bit_cast<std::uint32_t>(f);
    for (int b = 0; b < 4; ++b) bytes.push_back(static_cast<std::uint8_t>(u >> (8 * b)));
  }
  EXPECT_EQ(decode_tensor(bytes), Matrix(1, 3, {1.5, -2.0, 0.25}));
}

TEST(TensorFile, DistinctErrors) {
  const auto good = encode_tensor(Matrix(2, 2, {1, 2, 3, 4}), Dtype::f64);

  auto bad_magic = good;
  std::fill_n(bad_magic.begin(), 4, 'X');
  EXPECT_EQ(decode_error(bad_magic), Errc::bad_magic);

  auto bad_version = good;
  bad_version[4] = 2;
  EXPECT_EQ(decode_error(bad_version), Errc::bad_version);

  auto bad_dtype = good;
  bad_dtype[5] = 7;
  EXPECT_EQ(decode_error(bad_dtype), Errc::bad_dtype);

  auto bad_rank = good;
  bad_rank[6] = 3;
  EXPECT_EQ(decode_error(bad_rank), Errc::bad_rank);

  auto truncated = good;
  truncated.pop_back();
  EXPECT_EQ(decode_error(truncated), Errc::truncated_payload);
  EXPECT_EQ(decode_error({0x45, 0x41, 0x4C, 0x54, 1}), Errc::truncated_payload);

  auto non_finite = encode_tensor(Matrix(1, 1, {0.0}), Dtype::f64);
  non_finite[8 + 16 + 7] = 0x7F;
  non_finite[8 + 16 + 6] = 0xF0;
  EXPECT_EQ(decode_error(non_finite), Errc::invalid_argument);
}

TEST(TensorFile, FilesOnDisk) {
  const auto dir = std::filesystem::temp_directory_path() / "eala_tensor_test";
  std::filesystem::create_directories(dir);
  Rng rng(62);
  const Matrix m = testing::uniform_matrix(rng, 4, 3);
  write_tensor(dir / "m.ealt", m);
  EXPECT_EQ(read_tensor(dir / "m.ealt"), m);
  EXPECT_EQ(std::filesystem::file_size(dir / "m.ealt"), 8u + 16u + 12u * 8u);
  try {
    read_tensor(dir / "missing.ealt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::io_error);
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace eala
