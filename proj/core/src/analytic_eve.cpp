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
#include <vector>

#include "analytic_internal.hpp"

namespace hetcran {

using detail::kLn2;
using detail::kPi;

namespace {

struct InterferenceTerm {
    double weight;  // lambda * K
    double power;   // c
    double delta;   // 2 / eta
};

/// Strongest-eavesdropper model of one link. With s = u x r^eta_t the
/// per-Eve exponent is s N + sum_i lambda_i K_i (s c_i)^delta_i.
class EveModel {
public:
    EveModel(LinkSpec link, const NetworkConfig& cfg, const QuadratureSpec& spec)
        : lambda_e_(cfg.lambda_e) {
        link.validate();
        cfg.validate();
        const double beta = cfg.beta();
        const QuadratureSpec kspec = spec.tightened(100.0);
        if (link.tier == Tier::rrh) {
            eta_t_ = cfg.eta_r;
            u_ = 1.0 / (cfg.p_r * beta);
            noise_ = cfg.b_o * cfg.ne;
        } else {
            eta_t_ = cfg.eta_m;
            u_ = cfg.s_users / (cfg.p_m * beta);
            noise_ = cfg.mbs_eve_noise_power();
        }
        terms_.push_back({cfg.lambda_r * unit_interference_constant(cfg.eta_r, 1, kspec),
                          cfg.p_r * beta, 2.0 / cfg.eta_r});
        if (link.rb_mode == RbMode::shared)
            terms_.push_back(
                {cfg.lambda_m * unit_interference_constant(cfg.eta_m, cfg.s_users, kspec),
                 cfg.p_m * beta / cfg.s_users, 2.0 / cfg.eta_m});
    }

    /// int_0^inf exp(-exponent(r)) r dr at threshold x > 0.
    double radial_integral(double x, const QuadratureSpec& spec) const {
        const double ux = u_ * x;
        double r0 = std::pow(1.0 / (noise_ * ux), 1.0 / eta_t_);
        for (const auto& t : terms_) {
            const double coef = t.weight * std::pow(t.power * ux, t.delta);
            r0 = std::min(r0, std::pow(1.0 / coef, 1.0 / (eta_t_ * t.delta)));
        }
        auto integrand = [&](double r) {
            const double s = ux * std::pow(r, eta_t_);
            double e = s * noise_;
            for (const auto& t : terms_) e += t.weight * std::pow(s * t.power, t.delta);
            return std::exp(-e) * r;
        };
        return integrate_semi_infinite(integrand, 0.0, spec, "eavesdropper radial integral", r0);
    }

    double cdf(double x, const QuadratureSpec& spec) const {
        if (lambda_e_ == 0.0) return 1.0;
        if (!(x > 0.0)) return 0.0;
        if (std::isinf(x)) return 1.0;
        return std::exp(-2.0 * kPi * lambda_e_ * radial_integral(x, spec));
    }

    double one_minus_cdf(double x, const QuadratureSpec& spec) const {
        if (lambda_e_ == 0.0) return 0.0;
        if (!(x > 0.0)) return 1.0;
        if (std::isinf(x)) return 0.0;
        return -std::expm1(-2.0 * kPi * lambda_e_ * radial_integral(x, spec));
    }

    double min_delta() const {
        double d = 1.0;
        for (const auto& t : terms_) d = std::min(d, t.delta);
        return d;
    }

private:
    double lambda_e_;
    double eta_t_ = 0.0;
    double u_ = 0.0;
    double noise_ = 0.0;
    std::vector<InterferenceTerm> terms_;
};

}  // namespace

double eve_sinr_cdf(LinkSpec link, double x, const NetworkConfig& cfg, const QuadratureSpec& spec) {
    if (!(x >= 0.0)) throw DomainError("eve_sinr_cdf: x must be >= 0");
    const EveModel model(link, cfg, spec);
    return model.cdf(x, spec.tightened(10.0));
}

double eve_ergodic_capacity(LinkSpec link, const NetworkConfig& cfg, const QuadratureSpec& spec) {
    const EveModel model(link, cfg, spec);
    if (cfg.lambda_e == 0.0) return 0.0;
    const QuadratureSpec inner = spec.tightened(10.0);
    auto head = [&](double x) { return model.one_minus_cdf(x, inner) / (1.0 + x); };
    const double near = integrate(head, 0.0, 1.0, spec, "eavesdropper capacity (x < 1)");
    // x = e^y on [1, inf); the tail decays like e^(-delta y).
    auto tail = [&](double y) {
        return model.one_minus_cdf(std::exp(y), inner) / (1.0 + std::exp(-y));
    };
    const double far = integrate_semi_infinite(tail, 0.0, spec, "eavesdropper capacity (x >= 1)",
                                               1.0 / model.min_delta());
    return (near + far) / kLn2;
}

}  // namespace hetcran
