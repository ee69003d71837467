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

#include "hetcran/model.hpp"
#include "hetcran/numerics.hpp"

namespace hetcran {

struct SecrecyRateReport {
    double user_capacity = 0.0;  // bits/s/Hz
    double eve_capacity = 0.0;   // bits/s/Hz
    double secrecy_rate = 0.0;   // [user - eve]^+
    LinkSpec link;
};

struct OutageReport {
    double connection_outage = 0.0;
    double secrecy_outage = 0.0;
    double rate = 0.0;
    double secrecy_rate_target = 0.0;
    double serving_distance = 0.0;
};

struct EnergyReport {
    double ee_rrh = 0.0;          // bits/J, full RRH power model
    double ee_rrh_approx = 0.0;   // alpha B_o C_Rk / (P_R / eps_R)
    double ee_mbs = 0.0;          // static and backhaul power dropped
    double ee_mbs_exact = 0.0;    // full MBS power model
    double ee_network = 0.0;      // area throughput over area power
};

struct DelayTolerantDecision {
    double max_rate = 0.0;
    double eve_capacity = 0.0;
    double margin = 0.0;  // max_rate - eve_capacity
    bool outage_flag = false;
};

// ---------------------------------------------------------------- users

/// P(SINR > gamma) for a user at serving distance d_o.
///
/// The MBS link replaces the serving gain by N_M - S + 1 and inverts the
/// interference characteristic function.
double user_sinr_ccdf(LinkSpec link, double gamma, double d_o, const NetworkConfig& cfg,
                      const QuadratureSpec& spec = QuadratureSpec{});

/// RRH shared-RB CCDF through the incomplete-beta closed form.
double rrh_shared_ccdf_incomplete_beta(double gamma, double d_o, const NetworkConfig& cfg,
                                       const QuadratureSpec& spec = QuadratureSpec{});

/// Worst-case CCDF of the RRH shared-RB link with MBS interferers spread
/// over the whole plane.
double rrh_shared_ccdf_lower_bound(double gamma, double d_o, const NetworkConfig& cfg);

/// Ergodic capacity in bits/s/Hz. For the MBS link this is the Jensen
/// lower bound of mbs_capacity_lower_bound().
double user_ergodic_capacity(LinkSpec link, const NetworkConfig& cfg,
                             const QuadratureSpec& spec = QuadratureSpec{});

/// Closed-form lower bound on the MBS ergodic capacity. Zero when either
/// pathloss exponent is >= 4, where the mean interference diverges.
double mbs_capacity_lower_bound(const NetworkConfig& cfg);

/// Mean interference at an MBS user from one tier, averaged over distance.
double mean_mbs_user_interference(Tier tier, const NetworkConfig& cfg);

// ---------------------------------------------------------------- eves

/// CDF of the strongest eavesdropper's SINR.
double eve_sinr_cdf(LinkSpec link, double x, const NetworkConfig& cfg,
                    const QuadratureSpec& spec = QuadratureSpec{});

/// Ergodic capacity of the strongest eavesdropper, bits/s/Hz.
double eve_ergodic_capacity(LinkSpec link, const NetworkConfig& cfg,
                            const QuadratureSpec& spec = QuadratureSpec{});

// ---------------------------------------------------------------- secrecy

SecrecyRateReport ergodic_secrecy_rate(LinkSpec link, const NetworkConfig& cfg,
                                       const QuadratureSpec& spec = QuadratureSpec{});

/// Area ergodic secrecy rate of one tier, bits/s/m^2.
double area_secrecy_rate(Tier tier, const NetworkConfig& cfg,
                         const QuadratureSpec& spec = QuadratureSpec{});

double connection_outage(LinkSpec link, double rate, double d_o, const NetworkConfig& cfg,
                         const QuadratureSpec& spec = QuadratureSpec{});

/// Rate meeting a connection outage target sigma. Exact on dedicated RBs;
/// on shared RBs the rate at which rrh_shared_ccdf_lower_bound() equals
/// 1 - sigma, so the true outage is at most sigma. Only RRH links.
double rate_for_outage(LinkSpec link, double sigma, double d_o, const NetworkConfig& cfg);

double secrecy_outage(LinkSpec link, double rate, double secrecy_rate_target,
                      const NetworkConfig& cfg, const QuadratureSpec& spec = QuadratureSpec{});

OutageReport outage_report(LinkSpec link, double rate, double secrecy_rate_target, double d_o,
                           const NetworkConfig& cfg,
                           const QuadratureSpec& spec = QuadratureSpec{});

DelayTolerantDecision delay_tolerant_rate_rule(LinkSpec link, double secrecy_rate_target,
                                               const NetworkConfig& cfg,
                                               const QuadratureSpec& spec = QuadratureSpec{});

EnergyReport energy_efficiency(const NetworkConfig& cfg, const PowerModel& pm,
                               const QuadratureSpec& spec = QuadratureSpec{});

}  // namespace hetcran
