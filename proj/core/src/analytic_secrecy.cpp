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
#include <cmath>

#include "analytic_internal.hpp"

namespace hetcran {

using detail::kPi;

SecrecyRateReport ergodic_secrecy_rate(LinkSpec link, const NetworkConfig& cfg,
                                       const QuadratureSpec& spec) {
    SecrecyRateReport out;
    out.link = link;
    out.user_capacity = user_ergodic_capacity(link, cfg, spec);
    out.eve_capacity = eve_ergodic_capacity(link, cfg, spec);
    out.secrecy_rate = std::max(out.user_capacity - out.eve_capacity, 0.0);
    return out;
}

double area_secrecy_rate(Tier tier, const NetworkConfig& cfg, const QuadratureSpec& spec) {
    cfg.validate();
    const double kb = cfg.k_rb * cfg.b_o;
    if (tier == Tier::mbs) {
        if (cfg.alpha == 1.0) return 0.0;
        const double r = ergodic_secrecy_rate(LinkSpec::mbs_shared(), cfg, spec).secrecy_rate;
        return cfg.lambda_m * (1.0 - cfg.alpha) * kb * cfg.s_users * r;
    }
    double out = 0.0;
    if (cfg.alpha > 0.0)
        out += cfg.alpha * kb *
               ergodic_secrecy_rate(LinkSpec::rrh_dedicated(), cfg, spec).secrecy_rate;
    if (cfg.alpha < 1.0)
        out += (1.0 - cfg.alpha) * kb *
               ergodic_secrecy_rate(LinkSpec::rrh_shared(), cfg, spec).secrecy_rate;
    return cfg.lambda_r * out;
}

double connection_outage(LinkSpec link, double rate, double d_o, const NetworkConfig& cfg,
                         const QuadratureSpec& spec) {
    if (!(rate > 0.0)) throw DomainError("connection_outage: rate must be > 0");
    const double gamma = std::exp2(rate) - 1.0;
    return std::clamp(1.0 - user_sinr_ccdf(link, gamma, d_o, cfg, spec), 0.0, 1.0);
}

double rate_for_outage(LinkSpec link, double sigma, double d_o, const NetworkConfig& cfg) {
    link.validate();
    cfg.validate();
    detail::require_distance(d_o);
    if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("rate_for_outage: sigma must lie in (0, 1)");
    if (link.tier == Tier::mbs)
        throw DomainError("rate_for_outage: only RRH links have a closed-form rate");
    const double dr = std::pow(d_o, cfg.eta_r);
    if (link.rb_mode == RbMode::dedicated) {
        const double snr = -std::log1p(-sigma) / (detail::rrh_noise_coefficient(cfg) * dr);
        return std::log2(1.0 + snr);
    }
    const double delta = 2.0 / cfg.eta_m;
    const int S = cfg.s_users;
    double sum = 0.0;
    for (int mu = 1; mu <= S; ++mu)
        sum += binomial(S, mu) *
               std::exp(std::lgamma(mu - delta) + std::lgamma(S - mu + delta) - std::lgamma(S));
    const double target = -std::log1p(-sigma);
    const double delta1 = cfg.eta_m * target / (2.0 * kPi * cfg.lambda_m * sum);
    const double sir = cfg.p_r * S / (cfg.p_m * dr) * std::pow(delta1, cfg.eta_m / 2.0);

    // Noise-free root is an upper end; keep the noise term and bisect below it.
    const double noise = detail::rrh_noise_coefficient(cfg) * dr;
    const double interference = target / std::pow(sir, delta);
    auto excess = [&](double g) { return noise * g + interference * std::pow(g, delta) - target; };
    double lo = 0.0;
    double hi = sir;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) > 0.0 ? hi : lo) = mid;
    }
    return std::log2(1.0 + lo);
}

double secrecy_outage(LinkSpec link, double rate, double secrecy_rate_target,
                      const NetworkConfig& cfg, const QuadratureSpec& spec) {
    if (!(secrecy_rate_target > 0.0))
        throw DomainError("secrecy_outage: secrecy rate target must be > 0");
    if (!(secrecy_rate_target <= rate))
        throw DomainError("secrecy_outage: secrecy rate target must not exceed the rate");
    const double x = std::exp2(rate - secrecy_rate_target) - 1.0;
    return std::clamp(1.0 - eve_sinr_cdf(link, x, cfg, spec), 0.0, 1.0);
}

OutageReport outage_report(LinkSpec link, double rate, double secrecy_rate_target, double d_o,
                           const NetworkConfig& cfg, const QuadratureSpec& spec) {
    OutageReport out;
    out.rate = rate;
    out.secrecy_rate_target = secrecy_rate_target;
    out.serving_distance = d_o;
    out.connection_outage = connection_outage(link, rate, d_o, cfg, spec);
    out.secrecy_outage = secrecy_outage(link, rate, secrecy_rate_target, cfg, spec);
    return out;
}

DelayTolerantDecision delay_tolerant_rate_rule(LinkSpec link, double secrecy_rate_target,
                                               const NetworkConfig& cfg,
                                               const QuadratureSpec& spec) {
    if (!(secrecy_rate_target > 0.0))
        throw DomainError("delay_tolerant_rate_rule: secrecy rate target must be > 0");
    DelayTolerantDecision out;
    out.max_rate = user_ergodic_capacity(link, cfg, spec);
    out.eve_capacity = eve_ergodic_capacity(link, cfg, spec);
    out.margin = out.max_rate - out.eve_capacity;
    out.outage_flag = out.margin < secrecy_rate_target;
    return out;
}

EnergyReport energy_efficiency(const NetworkConfig& cfg, const PowerModel& pm,
                               const QuadratureSpec& spec) {
    cfg.validate();
    pm.validate();
    const double c_k = user_ergodic_capacity(LinkSpec::rrh_dedicated(), cfg, spec);
    const double c_nu = user_ergodic_capacity(LinkSpec::rrh_shared(), cfg, spec);
    const double c_m = mbs_capacity_lower_bound(cfg);
    const double kb = cfg.k_rb * cfg.b_o;
    const double a = cfg.alpha;
    const double p_rrh = rrh_total_power(pm, cfg);
    const double p_mbs = mbs_total_power(pm, cfg);
    const double p_mbs_rb = mbs_per_rb_power(pm, cfg);
    if (!(p_rrh > 0.0) || !(p_mbs > 0.0) || !(p_mbs_rb > 0.0))
        throw DomainError("energy_efficiency: zero power consumption");

    EnergyReport out;
    const double rrh_throughput = a * kb * c_k + (1.0 - a) * kb * c_nu;
    out.ee_rrh = rrh_throughput / p_rrh;
    out.ee_rrh_approx = a * cfg.b_o * c_k / (cfg.p_r / pm.eps_r);
    out.ee_mbs = cfg.b_o * cfg.s_users * c_m / p_mbs_rb;
    out.ee_mbs_exact = (1.0 - a) * kb * cfg.s_users * c_m / p_mbs;
    const double area_throughput = cfg.lambda_r * a * kb * c_k +
                                   (1.0 - a) * kb * (cfg.lambda_r * c_nu + cfg.lambda_m * cfg.s_users * c_m);
    out.ee_network = area_throughput / (cfg.lambda_r * p_rrh + cfg.lambda_m * p_mbs);
    return out;
}

}  // namespace hetcran
