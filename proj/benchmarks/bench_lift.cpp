/*
* Copyright (C) 2026 carleman-reach contributors
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
#include "carleman/carleman.hpp"

#include <benchmark/benchmark.h>

namespace
{

void BM_BoxKronPow(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const int i  = static_cast<int>(state.range(1));
    auto X       = carleman::Hyperrectangle::ball(n, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(carleman::box_kron_pow(X, i));
    }
    state.counters["components"] = static_cast<double>(carleman::checked_pow(n, i, SIZE_MAX));
}
BENCHMARK(BM_BoxKronPow)->Args({3, 5})->Args({10, 3});

void BM_AssembleSeir(benchmark::State& state)
{
    const auto sys = carleman::build_seir({});
    const int N    = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(carleman::assemble(sys, N));
    }
}
BENCHMARK(BM_AssembleSeir)->DenseRange(2, 6, 2);

void BM_AssembleBurgers(benchmark::State& state)
{
    const auto model = carleman::build_burgers({});
    for (auto _ : state) {
        benchmark::DoNotOptimize(carleman::assemble(model.sys, 3));
    }
}
BENCHMARK(BM_AssembleBurgers)->Unit(benchmark::kMillisecond);

void BM_LiftBoxBurgers(benchmark::State& state)
{
    const auto model = carleman::build_burgers({});
    for (auto _ : state) {
        benchmark::DoNotOptimize(carleman::lift_box(model.X0, 3));
    }
}
BENCHMARK(BM_LiftBoxBurgers)->Unit(benchmark::kMillisecond);

} // namespace
