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

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace hetcran {

/// Philox4x32-10 block function.
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter ctr, Key key) {
        constexpr std::uint64_t kM0 = 0xD2511F53u;
        constexpr std::uint64_t kM1 = 0xCD9E8D57u;
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = kM0 * ctr[0];
            const std::uint64_t p1 = kM1 * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
            key[0] += 0x9E3779B9u;
            key[1] += 0xBB67AE85u;
        }
        return ctr;
    }
};

/// Uniform random bit generator over one Philox stream.
///
/// The counter is (block, purpose, trial low word, trial high word) and the
/// key is the 64-bit seed, so every (seed, purpose, trial) triple names an
/// independent stream.
class PhiloxStream {
public:
    using result_type = std::uint32_t;

    PhiloxStream(std::uint64_t seed, std::uint32_t purpose, std::uint64_t trial)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          ctr_{0u, purpose, static_cast<std::uint32_t>(trial),
               static_cast<std::uint32_t>(trial >> 32)} {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        if (index_ == 4) refill();
        return out_[index_++];
    }

    /// Uniform on (0, 1) with 53 random bits.
    double uniform() {
        const std::uint64_t hi = (*this)() >> 5;  // 27 bits
        const std::uint64_t lo = (*this)() >> 6;  // 26 bits
        return static_cast<double>((hi << 26) | lo) * 0x1.0p-53 + 0x1.0p-54;
    }
    double exponential() { return -std::log(uniform()); }

private:
    void refill() {
        out_ = Philox4x32::block(ctr_, key_);
        ++ctr_[0];
        index_ = 0;
    }

    Philox4x32::Key key_;
    Philox4x32::Counter ctr_;
    Philox4x32::Counter out_{};
    int index_ = 4;
};

}  // namespace hetcran
