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

#include "eala/error.hpp"

namespace eala {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::empty_input: return "empty input";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::domain_error: return "domain error";
    case Errc::undefined_divergence: return "undefined divergence";
    case Errc::unattainable_target: return "unattainable target";
    case Errc::resource_exhausted: return "resource exhausted";
    case Errc::bad_magic: return "bad magic";
    case Errc::bad_version: return "bad version";
    case Errc::bad_dtype: return "bad dtype";
    case Errc::bad_rank: return "bad rank";
    case Errc::truncated_payload: return "truncated payload";
    case Errc::io_error: return "i/o error";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace eala
