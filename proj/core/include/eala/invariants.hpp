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

#include <cstdint>
#include <string>
#include <vector>

namespace eala {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Seeded property sweeps over every library invariant, sized to finish in a
/// few seconds. Backs the `check` subcommand.
std::vector<CheckResult> run_invariant_suite(std::uint64_t seed = 0);

}  // namespace eala
