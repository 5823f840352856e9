// Copyright 2026 The clickcounter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "clickcounter/distribution.hpp"
#include "clickcounter/errors.hpp"
#include "clickcounter/montecarlo.hpp"
#include "clickcounter/temporal.hpp"

namespace {

using namespace clickcounter;

DetectorArrayModel model(std::int64_t n) {
  return DetectorArrayModel(static_cast<std::uint64_t>(n), ExactRational(9, 10), ExactRational(1, 10000));
}

void BM_ClosedFast(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(1));
  const auto arr = model(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(click_distribution_closed(m, arr, EvalMode::fast));
}
BENCHMARK(BM_ClosedFast)->Args({6, 8})->Args({64, 10})->Args({128, 12})->Args({1024, 12});

void BM_ClosedExact(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(1));
  const auto arr = model(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(click_distribution_closed(m, arr, EvalMode::exact));
}
BENCHMARK(BM_ClosedExact)->Args({6, 8})->Args({64, 10})->Args({128, 12})->Args({1024, 12});

void BM_BruteForce(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(1));
  const auto arr = model(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(click_distribution_bruteforce(m, arr));
}
BENCHMARK(BM_BruteForce)->Args({4, 6})->Args({6, 8});

void BM_FiniteSizeExact(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(finite_size_error(12, Probability(ExactRational(7, 10)), n, EvalMode::exact));
  }
}
BENCHMARK(BM_FiniteSizeExact)->Arg(1000)->Arg(100000)->Arg(1 << 24);

void BM_TemporalOptimum(benchmark::State& state) {
  const Probability eta_c(ExactRational(99, 100));
  const Probability eta(ExactRational(1));
  for (auto _ : state) benchmark::DoNotOptimize(optimal_coupler_count(7, eta_c, eta));
}
BENCHMARK(BM_TemporalOptimum);

void BM_MonteCarloShots(benchmark::State& state) {
  const auto arr = DetectorArrayModel(8, 0.7, 0.01);
  SimulationConfig cfg;
  cfg.samples = static_cast<std::uint64_t>(state.range(0));
  cfg.seed = 42;
  for (auto _ : state) benchmark::DoNotOptimize(empirical_distribution(4, arr, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloShots)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
