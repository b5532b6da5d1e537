// Copyright 2026 The cosetlab Authors.
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

#include "cosetlab/character.hpp"
#include "cosetlab/finite_group.hpp"

namespace {

using namespace cosetlab;

void BM_CongruenceClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(congruence_group(n, m).order());
}
BENCHMARK(BM_CongruenceClosure)->Args({2, 5})->Args({3, 2})->Args({2, 11})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_InducedTrivial(benchmark::State& state) {
  const GroupPtr g = share(congruence_group(2, static_cast<int>(state.range(0))));
  const Subgroup b = Subgroup::where(g, [](const Element& x) { return x[2] == 0; });
  const Character one = trivial_character(b.group());
  for (auto _ : state) benchmark::DoNotOptimize(induce_character(one, b).degree());
}
BENCHMARK(BM_InducedTrivial)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
