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

#include <random>

#include "nmr/logic/cnf.h"
#include "nmr/logic/solver.h"

namespace nmr {
namespace {

std::vector<Formula> pigeonhole(int holes) {
  // holes + 1 pigeons into `holes` holes; unsatisfiable.
  auto at = [](int p, int h) { return Formula::Atom("p" + std::to_string(p) + "_" + std::to_string(h)); };
  std::vector<Formula> fs;
  for (int p = 0; p <= holes; ++p) {
    std::vector<Formula> some;
    for (int h = 0; h < holes; ++h) some.push_back(at(p, h));
    fs.push_back(Formula::Or(some));
  }
  for (int h = 0; h < holes; ++h)
    for (int p = 0; p <= holes; ++p)
      for (int r = p + 1; r <= holes; ++r) fs.push_back(Formula::Not(Formula::And({at(p, h), at(r, h)})));
  return fs;
}

void BM_Pigeonhole(benchmark::State& state) {
  const auto fs = pigeonhole(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_consistent(fs));
}
BENCHMARK(BM_Pigeonhole)->DenseRange(3, 6);

void BM_ExactlyOneEntailment(benchmark::State& state) {
  std::vector<Formula> atoms;
  for (int i = 0; i < state.range(0); ++i) atoms.push_back(Formula::Atom("t_" + std::to_string(i)));
  const std::vector<Formula> kb{Formula::ExactlyOne(atoms)};
  const Formula q = Formula::Or(atoms);
  for (auto _ : state) benchmark::DoNotOptimize(entails(kb, q));
}
BENCHMARK(BM_ExactlyOneEntailment)->RangeMultiplier(2)->Range(4, 64);

void BM_RandomThreeSat(benchmark::State& state) {
  const int vars = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  std::vector<Formula> fs;
  for (int i = 0; i < vars * 4; ++i) {
    std::vector<Formula> clause;
    for (int k = 0; k < 3; ++k) {
      const Formula a = Formula::Atom("x" + std::to_string(rng() % vars));
      clause.push_back(rng() % 2 ? a : Formula::Not(a));
    }
    fs.push_back(Formula::Or(clause));
  }
  for (auto _ : state) benchmark::DoNotOptimize(is_consistent(fs));
}
BENCHMARK(BM_RandomThreeSat)->Arg(20)->Arg(40)->Arg(60);

}  // namespace
}  // namespace nmr

BENCHMARK_MAIN();
