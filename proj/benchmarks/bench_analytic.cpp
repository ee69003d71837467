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

#include "hetcran/analytic.hpp"

namespace {

using namespace hetcran;

void BM_UserCapacity(benchmark::State& state) {
    const NetworkConfig cfg;
    const LinkSpec link = state.range(0) == 0 ? LinkSpec::rrh_dedicated() : LinkSpec::rrh_shared();
    for (auto _ : state) benchmark::DoNotOptimize(user_ergodic_capacity(link, cfg));
}
BENCHMARK(BM_UserCapacity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MbsCcdfGilPelaez(benchmark::State& state) {
    const NetworkConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(user_sinr_ccdf(LinkSpec::mbs_shared(), 1000.0, 50.0, cfg));
}
BENCHMARK(BM_MbsCcdfGilPelaez)->Unit(benchmark::kMillisecond);

void BM_EveCapacity(benchmark::State& state) {
    const NetworkConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(eve_ergodic_capacity(LinkSpec::rrh_shared(), cfg));
}
BENCHMARK(BM_EveCapacity)->Unit(benchmark::kMillisecond);

void BM_AreaSecrecyRate(benchmark::State& state) {
    const NetworkConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(area_secrecy_rate(Tier::rrh, cfg));
}
BENCHMARK(BM_AreaSecrecyRate)->Unit(benchmark::kMillisecond);

void BM_RateForOutageShared(benchmark::State& state) {
    const NetworkConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(rate_for_outage(LinkSpec::rrh_shared(), 0.1, 30.0, cfg));
}
BENCHMARK(BM_RateForOutageShared);

}  // namespace
