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

#include "eala/tensor_file.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

namespace eala {
namespace {

constexpr std::uint8_t kMagic[4] = {0x45, 0x41, 0x4C, 0x54};

template <typename U>
void put_le(std::vector<std::uint8_t>& out, U value) {
  for (std::size_t i = 0; i < sizeof(U); ++i) {
    out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
  }
}

template <typename U>
U get_le(std::span<const std::uint8_t> in, std::size_t offset) {
  U value = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) value |= static_cast<U>(in[offset + i]) << (8 * i);
  return value;
}

}  // namespace

std::size_t dtype_width(Dtype d) noexcept { return d == Dtype::f32 ? 4 : 8; }

std::vector<std::uint8_t> encode_tensor(const Matrix& m, Dtype dtype) {
  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  out.reserve(8 + 16 + m.size() * dtype_width(dtype));
  out.push_back(kTensorFileVersion);
  out.push_back(static_cast<std::uint8_t>(dtype));
  put_le<std::uint16_t>(out, 2);
  put_le<std::uint64_t>(out, m.rows());
  put_le<std::uint64_t>(out, m.cols());
  for (double v : m.data()) {
    if (dtype == Dtype::f32) {
      put_le(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
    } else {
      put_le(out, std::bit_cast<std::uint64_t>(v));
    }
  }
  return out;
}

Matrix decode_tensor(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4) throw Error(Errc::truncated_payload, "file shorter than magic");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw Error(Errc::bad_magic, "expected \"EALT\"");
  }
  if (bytes.size() < 8) throw Error(Errc::truncated_payload, "header is incomplete");
  if (bytes[4] != kTensorFileVersion) {
    throw Error(Errc::bad_version, "version " + std::to_string(bytes[4]) + " is not supported");
  }
  if (bytes[5] != static_cast<std::uint8_t>(Dtype::f32) &&
      bytes[5] != static_cast<std::uint8_t>(Dtype::f64)) {
    throw Error(Errc::bad_dtype, "dtype code " + std::to_string(bytes[5]));
  }
  const auto dtype = static_cast<Dtype>(bytes[5]);
  const auto rank = get_le<std::uint16_t>(bytes, 6);
  if (rank != 1 && rank != 2) {
    throw Error(Errc::bad_rank, "rank " + std::to_string(rank) + " (expected 1 or 2)");
  }
  const std::size_t header = 8 + 8 * static_cast<std::size_t>(rank);
  if (bytes.size() < header) throw Error(Errc::truncated_payload, "dimension table is incomplete");

  std::uint64_t dims[2] = {1, 1};
  for (std::size_t r = 0; r < rank; ++r) dims[2 - rank + r] = get_le<std::uint64_t>(bytes, 8 + 8 * r);

  const std::size_t width = dtype_width(dtype);
  const std::size_t available = bytes.size() - header;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / width;
  if (dims[1] != 0 && dims[0] > limit / dims[1]) {
    throw Error(Errc::truncated_payload, "dimensions overflow the addressable payload");
  }
  const std::uint64_t count = dims[0] * dims[1];
  if (count * width != available) {
    throw Error(Errc::truncated_payload, "payload has " + std::to_string(available) +
                                             " bytes, dimensions require " +
                                             std::to_string(count * width));
  }

  Vector data(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t at = header + i * width;
    data[i] = dtype == Dtype::f32
                  ? static_cast<double>(std::bit_cast<float>(get_le<std::uint32_t>(bytes, at)))
                  : std::bit_cast<double>(get_le<std::uint64_t>(bytes, at));
    if (!std::isfinite(data[i])) {
      throw Error(Errc::invalid_argument, "non-finite value at index " + std::to_string(i));
    }
  }
  return Matrix(dims[0], dims[1], std::move(data));
}

void write_tensor(const std::filesystem::path& path, const Matrix& m, Dtype dtype) {
  const auto bytes = encode_tensor(m, dtype);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::io_error, "short write to " + path.string());
}

Matrix read_tensor(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::io_error, "read failed for " + path.string());
  return decode_tensor(bytes);
}

}  // namespace eala
