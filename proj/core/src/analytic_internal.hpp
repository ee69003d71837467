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

#include <cmath>
#include <numbers>

#include "hetcran/analytic.hpp"

namespace hetcran::detail {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kLn2 = std::numbers::ln2;

/// B_o N_o / (P_R beta): noise coefficient of the RRH user link.
inline double rrh_noise_coefficient(const NetworkConfig& cfg) {
    return cfg.b_o * cfg.n0 / (cfg.p_r * cfg.beta());
}

/// MBS interferers seen by a user, marks Gamma(S, 1), per-stream power P_M / S.
inline InterferenceField mbs_interferers(const NetworkConfig& cfg, double r_min) {
    InterferenceField f;
    f.kind = MarkKind::gamma;
    f.density = cfg.lambda_m;
    f.power_scale = cfg.p_m * cfg.beta() / cfg.s_users;
    f.eta = cfg.eta_m;
    f.shape = cfg.s_users;
    f.r_min = r_min;
    return f;
}

/// RRH interferers, exponential marks, power P_R.
inline InterferenceField rrh_interferers(const NetworkConfig& cfg, double r_min) {
    InterferenceField f;
    f.kind = MarkKind::exponential;
    f.density = cfg.lambda_r;
    f.power_scale = cfg.p_r * cfg.beta();
    f.eta = cfg.eta_r;
    f.shape = 1;
    f.r_min = r_min;
    return f;
}

/// log2(1 + e^v) without overflow.
inline double log2_one_plus_exp(double v) {
    if (v > 30.0) return (v + std::log1p(std::exp(-v))) / kLn2;
    return std::log1p(std::exp(v)) / kLn2;
}

inline void require_distance(double d_o) {
    if (!(d_o > 0.0) || !std::isfinite(d_o)) throw DomainError("serving distance must be > 0");
}

}  // namespace hetcran::detail
