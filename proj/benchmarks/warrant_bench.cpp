// Copyright 2026 The nmr Authors. All Rights Reserved.
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

#include "nmr/defeat/defeat.h"
#include "nmr/prob/lotteryization.h"
#include "nmr/scenarios/scenarios.h"

namespace nmr {
namespace {

void BM_UnfairLotteryWarrant(benchmark::State& state) {
  const WarrantProblem p = make_unfair_lottery(static_cast<int>(state.range(0)), Rational(99, 100)).warrant_problem();
  EngineConfig c;
  c.gate = state.range(1) ? GateMode::kOn : GateMode::kOff;
  for (auto _ : state) benchmark::DoNotOptimize(compute_warrants(p, c));
}
BENCHMARK(BM_UnfairLotteryWarrant)->ArgsProduct({{3, 5, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_PrefaceWarrant(benchmark::State& state) {
  const WarrantProblem p =
      make_preface(static_cast<int>(state.range(0)), Rational(9, 10), Rational(4, 5), Rational(1, 2)).warrant_problem();
  EngineConfig c;
  c.gate = GateMode::kOn;
  for (auto _ : state) benchmark::DoNotOptimize(compute_warrants(p, c));
}
BENCHMARK(BM_PrefaceWarrant)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_LotteryizationExact(benchmark::State& state) {
  const LotteryizationParams p{Rational(1, 10), static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(lotteryization_value_exact(p));
}
BENCHMARK(BM_LotteryizationExact)->RangeMultiplier(2)->Range(2, 64);

}  // namespace
}  // namespace nmr

BENCHMARK_MAIN();
