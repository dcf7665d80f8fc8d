/*
 * Copyright 2026 The ltsdiamond Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "ltsdiamond/detector.hpp"
#include "ltsdiamond/diamond.hpp"
#include "ltsdiamond/diamond_label.hpp"
#include "ltsdiamond/generator.hpp"
#include "ltsdiamond/reducer.hpp"

namespace {

using namespace ltsdiamond;

void BM_FindAll(benchmark::State& state) {
    Lts lts = chain_of_diamonds(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_all_diamonds(lts));
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(lts.transition_count()));
}
BENCHMARK(BM_FindAll)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_Reduce(benchmark::State& state) {
    Lts lts = chain_of_diamonds(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce(lts));
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(lts.transition_count()));
}
BENCHMARK(BM_Reduce)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_InverseTail(benchmark::State& state) {
    Alphabet alphabet;
    Diamond d = parse_label("a^3 || (a b)^2 || (b c c)^1 || c^1", alphabet);
    ActionId b = alphabet.at("b");
    for (auto _ : state) {
        benchmark::DoNotOptimize(inverse_tail(d, b));
    }
}
BENCHMARK(BM_InverseTail);

void BM_TailDiamond(benchmark::State& state) {
    Alphabet alphabet;
    Diamond d = parse_label("a^3 || (a b)^2 || (b c c)^1 || c^1", alphabet);
    Diamond prefix = parse_label("a^2 || b^1 || c^1", alphabet);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tail_diamond(d, prefix));
    }
}
BENCHMARK(BM_TailDiamond);

void BM_InterleavingGraph(benchmark::State& state) {
    Alphabet alphabet;
    Diamond d = parse_label("a^3 || (a b)^2 || (b c c)^1 || c^1", alphabet);
    for (auto _ : state) {
        benchmark::DoNotOptimize(interleaving_graph(d));
    }
}
BENCHMARK(BM_InterleavingGraph);

}  // namespace

BENCHMARK_MAIN();
