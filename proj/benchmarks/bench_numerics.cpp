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

#include <cmath>

#include "hetcran/numerics.hpp"
#include "hetcran/quadrature.hpp"

namespace {

using namespace hetcran;

InterferenceField gamma_field(double r_min) {
    InterferenceField f;
    f.kind = MarkKind::gamma;
    f.density = 1e-5;
    f.power_scale = 1.0;
    f.eta = 3.0;
    f.shape = 15;
    f.r_min = r_min;
    return f;
}

void BM_UpperIncompleteGamma(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(upper_incomplete_gamma(0.0, x));
        x = x < 10.0 ? x * 1.01 : 0.1;
    }
}
BENCHMARK(BM_UpperIncompleteGamma);

void BM_Digamma(benchmark::State& state) {
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(digamma(x));
        x = x < 400.0 ? x + 0.37 : 0.5;
    }
}
BENCHMARK(BM_Digamma);

void BM_SemiInfiniteExponential(benchmark::State& state) {
    const QuadratureSpec spec;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            integrate_semi_infinite([](double x) { return std::exp(-x) / (1.0 + x); }, 0.0, spec));
}
BENCHMARK(BM_SemiInfiniteExponential);

void BM_Oscillatory(benchmark::State& state) {
    const QuadratureSpec spec;
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_oscillatory(
            [](double w) { return w == 0.0 ? 1.0 : std::sin(w) * std::exp(-0.1 * w) / w; }, spec));
}
BENCHMARK(BM_Oscillatory);

void BM_LaplaceClosedForm(benchmark::State& state) {
    const auto f = gamma_field(0.0);
    for (auto _ : state) benchmark::DoNotOptimize(laplace_exponent_closed_form(f, 1e5));
}
BENCHMARK(BM_LaplaceClosedForm);

void BM_LaplaceDirect(benchmark::State& state) {
    const auto f = gamma_field(static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(laplace_exponent_integral(f, 1e5));
}
BENCHMARK(BM_LaplaceDirect)->Arg(0)->Arg(50);

void BM_LaplaceIncompleteBeta(benchmark::State& state) {
    const auto f = gamma_field(50.0);
    for (auto _ : state) benchmark::DoNotOptimize(laplace_exponent_incomplete_beta(f, 1e5));
}
BENCHMARK(BM_LaplaceIncompleteBeta);

}  // namespace
