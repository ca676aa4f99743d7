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

// Machine-readable reports. Column order and key order are fixed; tests pin
// them against golden files.

#include <span>
#include <string>
#include <string_view>

#include "eala/bench.hpp"
#include "eala/fidelity.hpp"

namespace eala {

enum class ReportFormat { json, csv };

std::string_view to_string(EntropySource source) noexcept;

/// Shortest round-trip decimal; "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(double value);

std::string fidelity_to_json(const FidelityReport& report);
/// One row per query, header first, LF line endings.
std::string fidelity_to_csv(const FidelityReport& report);

std::string bench_to_csv(std::span<const BenchRecord> records);
std::string bench_to_json(std::span<const BenchRecord> records);

}  // namespace eala
