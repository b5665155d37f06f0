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

void BM_ExpmSeir(benchmark::State& state)
{
    const auto lifted = carleman::assemble(carleman::build_seir({}), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(carleman::expm(lifted.A, 0.1));
    }
    state.counters["dim"] = static_cast<double>(lifted.dim);
}
BENCHMARK(BM_ExpmSeir)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

carleman::ReachRequest seir_request()
{
    carleman::ReachRequest req;
    req.sys                 = carleman::build_seir({});
    req.X0                  = carleman::seir_initial_set();
    req.order               = 5;
    req.settings.delta      = 0.1;
    req.settings.horizon    = 10.0;
    req.settings.directions = carleman::box_template(3);
    req.settings.mode       = carleman::TimeMode::dense;
    req.error_mode          = carleman::ErrorMode::theorem1;
    req.reeval_times        = {4.0};
    return req;
}

// End-to-end SEIR run with one reevaluation: two lifts, two exponentials.
void BM_ReachSeir(benchmark::State& state)
{
    const auto req = seir_request();
    for (auto _ : state) {
        benchmark::DoNotOptimize(carleman::reach(req));
    }
}
BENCHMARK(BM_ReachSeir)->Unit(benchmark::kMillisecond);

void BM_ReachBurgers(benchmark::State& state)
{
    const auto model = carleman::build_burgers({});
    carleman::ReachRequest req;
    req.sys                 = model.sys;
    req.X0                  = model.X0;
    req.order               = static_cast<int>(state.range(0));
    req.settings.delta      = 0.01;
    req.settings.horizon    = 1.0;
    req.settings.directions = carleman::box_template(model.sys.dim());
    for (auto _ : state) {
        benchmark::DoNotOptimize(carleman::reach(req));
    }
}
BENCHMARK(BM_ReachBurgers)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->Iterations(1);

} // namespace

BENCHMARK_MAIN();
