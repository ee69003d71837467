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
#include <string>
#include <utility>

namespace hetcran {

enum class Tier { rrh, mbs };
enum class RbMode { dedicated, shared };

/// Selects one of the three legitimate links of the network.
struct LinkSpec {
    Tier tier = Tier::rrh;
    RbMode rb_mode = RbMode::dedicated;

    /// Throws DomainError for the (MBS, dedicated) combination.
    void validate() const;
    std::string name() const;

    static constexpr LinkSpec rrh_dedicated() { return {Tier::rrh, RbMode::dedicated}; }
    static constexpr LinkSpec rrh_shared() { return {Tier::rrh, RbMode::shared}; }
    static constexpr LinkSpec mbs_shared() { return {Tier::mbs, RbMode::shared}; }

    friend bool operator==(const LinkSpec&, const LinkSpec&) = default;
};

/// Parses "rrh-dedicated", "rrh-shared" or "mbs-shared".
LinkSpec parse_link(const std::string& text);
std::string tier_name(Tier tier);
Tier parse_tier(const std::string& text);

/// Noise PSD used at eavesdroppers of the MBS link.
enum class EveNoiseSource { ne, n1 };

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// (c / (4 pi f_c))^2 with c = 3e8 m/s.
double beta_pathloss_constant(double f_c);

struct NetworkConfig {
    double lambda_m = 1.0 / (500.0 * 500.0 * 3.14159265358979323846);
    double lambda_r = 20.0 / (500.0 * 500.0 * 3.14159265358979323846);
    double lambda_e = 1e-5;
    double p_m = 10.0;  // W per RB
    double p_r = 1.0;   // W per RB
    int n_m = 400;
    int s_users = 30;
    double eta_m = 3.0;
    double eta_r = 3.6;
    double f_c = 1e9;
    double b_o = 800e3;
    int k_rb = 25;
    double alpha = 0.5;
    double n0 = 6.309573444801929e-20;  // -162 dBm/Hz
    double n1 = 6.309573444801929e-20;
    double ne = 6.309573444801929e-20;
    EveNoiseSource mbs_eve_noise = EveNoiseSource::ne;

    /// Throws ConfigError naming the first violated invariant.
    void validate() const;

    double beta() const { return beta_pathloss_constant(f_c); }
    double total_density() const { return lambda_r + lambda_m; }
    /// B_o N_e or B_o N_1 according to mbs_eve_noise.
    double mbs_eve_noise_power() const;
};

struct PowerModel {
    double eps_r = 0.38;
    double eps_m = 0.38;
    double p_r0 = 0.1;
    double p_m0 = 4.0;
    double p_fh = 0.2;
    double p_bh = 0.2;
    std::array<double, 3> lambda_rho0{4.8, 0.0, 2.08e-8};
    std::array<double, 3> lambda_rho1{1.0, 9.5e-8, 6.25e-8};

    void validate() const;
};

/// (A_R, A_M).
std::pair<double, double> association_probabilities(const NetworkConfig& cfg);

/// Density of the distance to the serving node, identical for both tiers.
double serving_distance_pdf(double x, Tier tier, const NetworkConfig& cfg);
double serving_distance_cdf(double x, const NetworkConfig& cfg);

double rrh_total_power(const PowerModel& pm, const NetworkConfig& cfg);
double mbs_total_power(const PowerModel& pm, const NetworkConfig& cfg);

/// Per-RB MBS power: P_M / eps_M plus the ZFBF processing polynomial.
double mbs_per_rb_power(const PowerModel& pm, const NetworkConfig& cfg);

}  // namespace hetcran
