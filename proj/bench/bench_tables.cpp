// Copyright 2026 The Authors.
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

#include <benchmark/benchmark.h>

#include "irs/presets.hpp"
#include "irs/ratemodel.hpp"
#include "irs/scheduler.hpp"
#include "irs/selection.hpp"

using namespace irs;

namespace {

struct Fixture {
  Scenario sc;
  std::vector<Configuration> configs;
};

Fixture base_fixture() {
  const ScenarioConfig cfg = *find_preset("base");
  return {build_scenario(cfg, 1), enumerate_configs(cfg.num_irss(), cfg.num_ues())};
}

void BM_TablesSerial(benchmark::State& state) {
  const Fixture f = base_fixture();
  const int mc = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_tables_reference(f.sc, f.configs, mc, 1));
}

void BM_TablesParallel(benchmark::State& state) {
  const Fixture f = base_fixture();
  const int mc = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_tables(f.sc, f.configs, mc, 1));
}

void BM_ParallelSlide(benchmark::State& state) {
  const Fixture f = base_fixture();
  const RateTables t = build_tables(f.sc, f.configs, 20, 1);
  SelectionParams p;
  p.delta = 6;
  for (auto _ : state) benchmark::DoNotOptimize(parallel_slide(t, p));
}

}  // namespace

BENCHMARK(BM_TablesSerial)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TablesParallel)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelSlide)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
