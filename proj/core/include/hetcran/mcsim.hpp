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
#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

#include "hetcran/model.hpp"
#include "hetcran/philox.hpp"

namespace hetcran {

/// How fixed-distance outage trials condition on the serving distance.
enum class OutageConditioning {
    pinned,    // serving node at d_o, interferers restricted to r > d_o
    bucketed,  // natural geometry, trials with distance within 5% of d_o
};

/// Which user trials are generated.
enum class ServingCondition {
    natural,  // nearest node of either tier serves
    rrh,      // serving RRH at a Rayleigh distance, interferers beyond it
    mbs,      // serving MBS at a Rayleigh distance, interferers beyond it
};

struct SimSpec {
    double region_radius = 10000.0;  // m
    long n_trials = 10000;
    std::uint64_t seed = 1;
    bool antithetic = false;
    OutageConditioning conditioning = OutageConditioning::pinned;
    ServingCondition serving = ServingCondition::natural;
    /// Replace the MBS serving gain Gamma(N_M - S + 1, 1) by its mean.
    bool mbs_mean_fading = false;
    /// Worker threads; 0 reads HETCRAN_WORKERS, else hardware concurrency.
    int workers = 0;

    void validate() const;
    int resolved_workers() const;
};

struct MetricEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long n_effective = 0;
};

/// Sample mean and standard error of i.i.d. values.
MetricEstimate estimate_mean(const std::vector<double>& values);
/// Binomial proportion with standard error sqrt(p (1 - p) / n).
MetricEstimate estimate_proportion(long successes, long n);

struct Point {
    double x;
    double y;
};

/// Homogeneous PPP restricted to the disk of the given radius at the origin.
std::vector<Point> sample_ppp(double density, double region_radius, PhiloxStream& rng);
/// Homogeneous PPP restricted to the annulus r_in < |x| <= r_out.
std::vector<Point> sample_ppp_annulus(double density, double r_in, double r_out, PhiloxStream& rng);

/// Gamma(shape, 1) variate.
double sample_gamma(double shape, PhiloxStream& rng);

struct UserTrialOutcome {
    bool valid = false;  // false when no node was sampled
    Tier serving_tier = Tier::rrh;
    double serving_distance = 0.0;
    double sinr_dedicated = 0.0;  // RRH-served trials only
    double sinr_shared = 0.0;     // RRH shared RB or MBS link
    int n_mbs = 0;
    int n_rrh = 0;
};

struct EveTrialOutcome {
    /// Strongest-Eve SINR for rrh-dedicated, rrh-shared, mbs-shared.
    std::array<double, 3> sinr_max{};
    int n_eve = 0;
    int n_rrh = 0;
    int n_mbs = 0;
};

/// Index of a link in EveTrialOutcome::sinr_max.
int link_index(LinkSpec link);

struct UserTrialSummary {
    std::vector<UserTrialOutcome> outcomes;
    long n_valid = 0;
    long n_rrh_served = 0;
    long n_mbs_served = 0;
    MetricEstimate association_rrh;
    MetricEstimate capacity_rrh_dedicated;
    MetricEstimate capacity_rrh_shared;
    MetricEstimate capacity_mbs;
    /// Per-trial alpha C_k + (1 - alpha) C_nu over RRH-served trials.
    MetricEstimate capacity_rrh_combined;
    bool antithetic = false;
};

struct EveTrialSummary {
    std::vector<EveTrialOutcome> outcomes;
    std::array<MetricEstimate, 3> capacity;
    /// Per-trial alpha Ce_k + (1 - alpha) Ce_nu.
    MetricEstimate capacity_rrh_combined;
    long n_empty = 0;
};

UserTrialSummary run_user_trials(const NetworkConfig& cfg, const SimSpec& spec);
EveTrialSummary run_eve_trials(const NetworkConfig& cfg, const SimSpec& spec);

/// Empirical P(SINR > gamma) over the trials that used the link.
MetricEstimate user_ccdf_estimate(const UserTrialSummary& users, LinkSpec link, double gamma);
/// Empirical P(max Eve SINR <= x).
MetricEstimate eve_cdf_estimate(const EveTrialSummary& eves, LinkSpec link, double x);

/// User SINR samples with the serving distance fixed at d_o.
std::vector<double> fixed_distance_sinr_samples(LinkSpec link, double d_o, const NetworkConfig& cfg,
                                                const SimSpec& spec);

struct OutageEstimates {
    MetricEstimate connection_outage;
    MetricEstimate secrecy_outage;
};

/// Connection outage at (R, d_o) and secrecy outage at (R, R_s).
OutageEstimates estimate_outages(LinkSpec link, double rate, double secrecy_rate_target,
                                 double d_o, const NetworkConfig& cfg, const SimSpec& spec);

/// Fraction of samples with log2(1 + sinr) < rate.
MetricEstimate outage_fraction(const std::vector<double>& sinr, double rate);

/// Area ergodic secrecy rate from user and eavesdropper trials.
MetricEstimate area_secrecy_rate_estimate(Tier tier, const NetworkConfig& cfg,
                                          const UserTrialSummary& users,
                                          const EveTrialSummary& eves);

/// E[[log2(1 + gamma_u) - log2(1 + gamma_e)]^+] pairing user trial i with
/// eavesdropper trial i.
MetricEstimate paired_secrecy_rate_estimate(LinkSpec link, const UserTrialSummary& users,
                                            const EveTrialSummary& eves);

void write_user_trials_csv(std::ostream& out, const std::vector<UserTrialOutcome>& outcomes);
void write_eve_trials_csv(std::ostream& out, const std::vector<EveTrialOutcome>& outcomes);

/// Runs fn(i) for i in [0, n) on `workers` threads.
void parallel_for_index(long n, int workers, const std::function<void(long)>& fn);

/// One-sample Kolmogorov-Smirnov statistic of samples against a CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);
/// Asymptotic KS critical value at the given significance level.
double ks_critical_value(long n, double significance);

}  // namespace hetcran
