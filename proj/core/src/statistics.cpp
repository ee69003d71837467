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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "hetcran/errors.hpp"
#include "hetcran/mcsim.hpp"

namespace hetcran {

MetricEstimate estimate_mean(const std::vector<double>& values) {
    MetricEstimate out;
    out.n_effective = static_cast<long>(values.size());
    if (values.empty()) return out;
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / values.size();
    out.value = mean;
    if (values.size() < 2) return out;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double var = ss / (values.size() - 1);
    out.std_error = std::sqrt(var / values.size());
    return out;
}

MetricEstimate estimate_proportion(long successes, long n) {
    MetricEstimate out;
    out.n_effective = n;
    if (n <= 0) return out;
    const double p = static_cast<double>(successes) / n;
    out.value = p;
    out.std_error = std::sqrt(p * (1.0 - p) / n);
    return out;
}

MetricEstimate outage_fraction(const std::vector<double>& sinr, double rate) {
    const double threshold = std::exp2(rate) - 1.0;
    long count = 0;
    for (double s : sinr)
        if (s < threshold) ++count;
    return estimate_proportion(count, static_cast<long>(sinr.size()));
}

void SimSpec::validate() const {
    if (!(region_radius > 0.0) || !std::isfinite(region_radius))
        throw ConfigError("region radius must be > 0");
    if (n_trials < 1) throw ConfigError("number of trials must be >= 1");
    if (workers < 0) throw ConfigError("worker count must be >= 0");
}

int SimSpec::resolved_workers() const {
    if (workers > 0) return workers;
    if (const char* env = std::getenv("HETCRAN_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
        throw ConfigError(std::string("HETCRAN_WORKERS must be a positive integer, got '") + env +
                          "'");
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for_index(long n, int workers, const std::function<void(long)>& fn) {
    if (n <= 0) return;
    workers = static_cast<int>(std::clamp<long>(workers, 1, n));
    if (workers == 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    constexpr long kChunk = 64;
    std::atomic<long> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (;;) {
            const long start = next.fetch_add(kChunk);
            if (start >= n) return;
            const long stop = std::min(n, start + kChunk);
            try {
                for (long i = start; i < stop; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(n);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw DomainError("ks_statistic: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    return d;
}

double ks_critical_value(long n, double significance) {
    if (n < 1 || !(significance > 0.0 && significance < 1.0))
        throw DomainError("ks_critical_value: bad arguments");
    return std::sqrt(-0.5 * std::log(significance / 2.0)) / std::sqrt(static_cast<double>(n));
}

}  // namespace hetcran
