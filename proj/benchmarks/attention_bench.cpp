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

// Microbenchmarks for the three attention evaluation strategies.

#include <benchmark/benchmark.h>

#include "eala/eala.hpp"
#include "eala/oracle.hpp"
#include "eala/workload.hpp"

namespace {

eala::Workload make(const benchmark::State& state) {
  return eala::gen_workload({.n = static_cast<std::size_t>(state.range(0)),
                             .c = static_cast<std::size_t>(state.range(1)),
                             .score_scale = 0.1,
                             .seed = 1});
}

void set_counters(benchmark::State& state) {
  state.SetComplexityN(state.range(0));
  state.counters["N"] = static_cast<double>(state.range(0));
  state.counters["C"] = static_cast<double>(state.range(1));
}

void BM_ExactAttention(benchmark::State& state) {
  const eala::Workload w = make(state);
  for (auto _ : state) benchmark::DoNotOptimize(eala::exact_attention(w.q, w.k, w.v));
  set_counters(state);
}

void run_eala(benchmark::State& state, eala::ForwardPath path) {
  const eala::Workload w = make(state);
  const eala::EalaConfig cfg{.path = path};
  for (auto _ : state) benchmark::DoNotOptimize(eala::eala_attention(w.q, w.k, w.v, cfg));
  set_counters(state);
}

void BM_EalaLinear(benchmark::State& state) { run_eala(state, eala::ForwardPath::linear); }
void BM_EalaQuadratic(benchmark::State& state) { run_eala(state, eala::ForwardPath::quadratic); }

}  // namespace

BENCHMARK(BM_ExactAttention)
    ->ArgsProduct({benchmark::CreateRange(256, 2048, 2), {64}})
    ->Complexity(benchmark::oNSquared)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EalaLinear)
    ->ArgsProduct({benchmark::CreateRange(256, 16384, 2), {64}})
    ->Complexity(benchmark::oN)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EalaQuadratic)
    ->ArgsProduct({benchmark::CreateRange(256, 2048, 2), {64}})
    ->Complexity(benchmark::oNSquared)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
