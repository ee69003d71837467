/*
   Copyright 2026 The hetcran Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "hetcran/mcsim.hpp"

namespace {

using namespace hetcran;

SimSpec spec(long trials, double radius) {
    SimSpec s;
    s.n_trials = trials;
    s.region_radius = radius;
    s.workers = 1;
    return s;
}

void BM_PhiloxUniform(benchmark::State& state) {
    PhiloxStream rng(1, 1, 0);
    for (auto _ : state) benchmark::DoNotOptimize(rng.uniform());
}
BENCHMARK(BM_PhiloxUniform);

void BM_SampleGamma(benchmark::State& state) {
    PhiloxStream rng(1, 1, 0);
    for (auto _ : state) benchmark::DoNotOptimize(sample_gamma(30.0, rng));
}
BENCHMARK(BM_SampleGamma);

void BM_SamplePpp(benchmark::State& state) {
    PhiloxStream rng(1, 1, 0);
    const double lambda = 20.0 / (500.0 * 500.0 * 3.141592653589793);
    for (auto _ : state) benchmark::DoNotOptimize(sample_ppp(lambda, 5000.0, rng));
}
BENCHMARK(BM_SamplePpp);

void BM_UserTrials(benchmark::State& state) {
    const NetworkConfig cfg;
    const SimSpec s = spec(100, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_user_trials(cfg, s));
    state.SetItemsProcessed(state.iterations() * s.n_trials);
}
BENCHMARK(BM_UserTrials)->Arg(5000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_EveTrials(benchmark::State& state) {
    NetworkConfig cfg;
    cfg.lambda_e = state.range(0) == 0 ? 1e-5 : 1e-4;
    const SimSpec s = spec(20, 5000.0);
    for (auto _ : state) benchmark::DoNotOptimize(run_eve_trials(cfg, s));
    state.SetItemsProcessed(state.iterations() * s.n_trials);
}
BENCHMARK(BM_EveTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FixedDistanceMbs(benchmark::State& state) {
    const NetworkConfig cfg;
    const SimSpec s = spec(1000, 10000.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(fixed_distance_sinr_samples(LinkSpec::mbs_shared(), 50.0, cfg, s));
    state.SetItemsProcessed(state.iterations() * s.n_trials);
}
BENCHMARK(BM_FixedDistanceMbs)->Unit(benchmark::kMillisecond);

}  // namespace
