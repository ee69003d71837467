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

#include <cmath>

#include "analytic_internal.hpp"

namespace hetcran {

using detail::kLn2;
using detail::kPi;

namespace {

double rrh_dedicated_ccdf(double gamma, double d_o, const NetworkConfig& cfg) {
    return std::exp(-detail::rrh_noise_coefficient(cfg) * std::pow(d_o, cfg.eta_r) * gamma);
}

double rrh_shared_ccdf(double gamma, double d_o, const NetworkConfig& cfg,
                       const QuadratureSpec& spec) {
    const double s = std::pow(d_o, cfg.eta_r) * gamma / (cfg.p_r * cfg.beta());
    const double noise = cfg.b_o * cfg.n0 * s;
    if (noise > 745.0) return 0.0;
    const double lm = laplace_exponent_integral(detail::mbs_interferers(cfg, d_o), s, spec);
    return std::exp(-noise - lm);
}

double mbs_ccdf(double gamma, double d_o, const NetworkConfig& cfg, const QuadratureSpec& spec) {
    if (gamma == 0.0) return 1.0;
    const double gain = cfg.n_m - cfg.s_users + 1.0;
    const double t = cfg.p_m * cfg.beta() * gain / (cfg.s_users * std::pow(d_o, cfg.eta_m) * gamma) -
                     cfg.b_o * cfg.n1;
    if (t <= 0.0) return 0.0;
    const InterferenceField fr = detail::rrh_interferers(cfg, d_o);
    const InterferenceField fm = detail::mbs_interferers(cfg, d_o);
    const QuadratureSpec inner = spec.tightened(10.0);
    auto phi = [&](double w) {
        const ComplexValue s(0.0, -w);
        const ComplexValue e = laplace_exponent_integral(fr, s, inner) +
                               laplace_exponent_integral(fm, s, inner);
        return std::exp(-e);
    };
    return gil_pelaez_cdf(phi, t, spec, 1.0 / t, "MBS user SINR CCDF (characteristic inversion)");
}

}  // namespace

double user_sinr_ccdf(LinkSpec link, double gamma, double d_o, const NetworkConfig& cfg,
                      const QuadratureSpec& spec) {
    link.validate();
    cfg.validate();
    detail::require_distance(d_o);
    if (!(gamma >= 0.0)) throw DomainError("user_sinr_ccdf: gamma must be >= 0");
    if (std::isinf(gamma)) return 0.0;
    if (link.tier == Tier::mbs) return mbs_ccdf(gamma, d_o, cfg, spec);
    if (link.rb_mode == RbMode::dedicated) return rrh_dedicated_ccdf(gamma, d_o, cfg);
    return rrh_shared_ccdf(gamma, d_o, cfg, spec);
}

double rrh_shared_ccdf_incomplete_beta(double gamma, double d_o, const NetworkConfig& cfg,
                                       const QuadratureSpec& spec) {
    cfg.validate();
    detail::require_distance(d_o);
    if (!(gamma >= 0.0)) throw DomainError("gamma must be >= 0");
    const double s = std::pow(d_o, cfg.eta_r) * gamma / (cfg.p_r * cfg.beta());
    const double noise = cfg.b_o * cfg.n0 * s;
    const double lm = laplace_exponent_incomplete_beta(detail::mbs_interferers(cfg, d_o), s, spec);
    return std::exp(-noise - lm);
}

double rrh_shared_ccdf_lower_bound(double gamma, double d_o, const NetworkConfig& cfg) {
    cfg.validate();
    detail::require_distance(d_o);
    if (!(gamma >= 0.0)) throw DomainError("gamma must be >= 0");
    const double dr = std::pow(d_o, cfg.eta_r);
    const double s = dr * gamma / (cfg.p_r * cfg.beta());
    const double noise = detail::rrh_noise_coefficient(cfg) * dr * gamma;
    return std::exp(-noise - laplace_exponent_closed_form(detail::mbs_interferers(cfg, 0.0), s));
}

double mean_mbs_user_interference(Tier tier, const NetworkConfig& cfg) {
    const double eta = tier == Tier::mbs ? cfg.eta_m : cfg.eta_r;
    const double p = tier == Tier::mbs ? cfg.p_m : cfg.p_r;
    const double lambda = tier == Tier::mbs ? cfg.lambda_m : cfg.lambda_r;
    if (eta >= 4.0) return INFINITY;
    const double pl = kPi * cfg.total_density();
    return p * cfg.beta() * 2.0 * kPi * lambda * std::tgamma(2.0 - eta / 2.0) /
           ((eta - 2.0) * std::pow(pl, 1.0 - eta / 2.0));
}

double mbs_capacity_lower_bound(const NetworkConfig& cfg) {
    cfg.validate();
    if (cfg.eta_m >= 4.0 || cfg.eta_r >= 4.0) return 0.0;
    const double pl = kPi * cfg.total_density();
    const double interference = mean_mbs_user_interference(Tier::mbs, cfg) +
                                mean_mbs_user_interference(Tier::rrh, cfg) + cfg.b_o * cfg.n1;
    const double v = std::log(cfg.p_m * cfg.beta() / cfg.s_users) +
                     digamma(cfg.n_m - cfg.s_users + 1.0) -
                     0.5 * cfg.eta_m * (digamma(1.0) - std::log(pl)) - std::log(interference);
    return detail::log2_one_plus_exp(v);
}

double user_ergodic_capacity(LinkSpec link, const NetworkConfig& cfg, const QuadratureSpec& spec) {
    link.validate();
    cfg.validate();
    if (link.tier == Tier::mbs) return mbs_capacity_lower_bound(cfg);
    const double pl = kPi * cfg.total_density();
    const double dist_scale = 1.0 / std::sqrt(pl);
    const double n = detail::rrh_noise_coefficient(cfg);
    if (link.rb_mode == RbMode::dedicated) {
        auto integrand = [&](double x) {
            const double z = n * std::pow(x, cfg.eta_r);
            if (!(z > 1e-300)) return 0.0;
            return exp_scaled_e1(z) * serving_distance_pdf(x, Tier::rrh, cfg);
        };
        return integrate_semi_infinite(integrand, 0.0, spec, "RRH dedicated ergodic capacity",
                                       dist_scale) /
               kLn2;
    }
    const QuadratureSpec middle = spec.tightened(10.0);
    const QuadratureSpec inner = middle.tightened(10.0);
    const InterferenceField base = detail::mbs_interferers(cfg, 1.0);
    auto conditional = [&](double x) {
        InterferenceField field = base;
        field.r_min = x;
        const double xr = std::pow(x, cfg.eta_r);
        const double snr_scale = 1.0 / (n * xr);
        auto ccdf_of_log = [&](double y) {
            const double gamma = std::expm1(y);
            const double s = xr * gamma / (cfg.p_r * cfg.beta());
            const double noise = cfg.b_o * cfg.n0 * s;
            if (noise > 745.0) return 0.0;
            const double e = noise + laplace_exponent_integral(field, s, inner);
            return std::exp(-e);
        };
        const double y_scale = std::max(1.0, std::log1p(snr_scale) / 4.0);
        return integrate_semi_infinite(ccdf_of_log, 0.0, middle,
                                       "RRH shared conditional capacity", y_scale);
    };
    auto integrand = [&](double x) {
        const double f = serving_distance_pdf(x, Tier::rrh, cfg);
        if (f == 0.0) return 0.0;
        return conditional(x) * f;
    };
    return integrate_semi_infinite(integrand, 0.0, spec, "RRH shared ergodic capacity",
                                   dist_scale) /
           kLn2;
}

}  // namespace hetcran
