// Copyright 2026 The qtransport Authors.
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "qtransport/anneal.hpp"
#include "qtransport/brute_force.hpp"
#include "qtransport/qaoa.hpp"
#include "qtransport/tsp.hpp"

using namespace qtransport;

namespace {

QuboModel dense_qubo(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    QuboModel m(n);
    for (Index i = 0; i < n; ++i) {
        m.add_linear(i, c(rng));
        for (Index j = i + 1; j < n; ++j) m.add_quadratic(i, j, c(rng));
    }
    return m;
}

TspInstance ring_instance(std::size_t n) {
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i][j] = 1.0 + (i + j) % 3;
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
    return TspInstance(d);
}

}  // namespace

static void BM_BruteForce(benchmark::State& state) {
    const CostFunction cost = dense_qubo(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_min(cost));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_BruteForce)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_AnnealTsp(benchmark::State& state) {
    const CompiledCost cost{CostFunction(encode_tsp_one_hot(ring_instance(state.range(0))).model)};
    const AnnealSchedule schedule{100, 10.0, 0.01};
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(simulated_anneal(cost, schedule, seed++));
    state.SetItemsProcessed(state.iterations() * 100 * cost.num_vars());
}
BENCHMARK(BM_AnnealTsp)->Arg(5)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

static void BM_QaoaLayer(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto diag = cost_diagonal(dense_qubo(n, 2));
    StateVector s = init_uniform(n);
    for (auto _ : state) {
        apply_cost_phase(s, diag, 0.3);
        apply_mixer(s, 0.2);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_QaoaLayer)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);

static void BM_EncodeBinary(benchmark::State& state) {
    const TspInstance inst = ring_instance(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(encode_tsp_binary(inst));
}
BENCHMARK(BM_EncodeBinary)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
