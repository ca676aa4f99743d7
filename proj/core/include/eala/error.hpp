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

#include <stdexcept>
#include <string>
#include <string_view>

namespace eala {

enum class Errc {
  dimension_mismatch,
  empty_input,
  invalid_argument,
  domain_error,          // e.g. Taylor expansion outside n + S1 > 0
  undefined_divergence,  // KL with q_i > 0 and p_i = 0
  unattainable_target,   // bisection target outside the attainable entropy range
  resource_exhausted,
  bad_magic,
  bad_version,
  bad_dtype,
  bad_rank,
  truncated_payload,
  io_error,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the `Errc` codes so
/// callers (and tests) can distinguish failure kinds without parsing text.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace eala
