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

#include "hetcran/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hetcran/errors.hpp"

namespace hetcran {

void LinkSpec::validate() const {
    if (tier == Tier::mbs && rb_mode == RbMode::dedicated)
        throw DomainError("MBS transmits only on shared resource blocks");
}

std::string LinkSpec::name() const {
    std::string out = tier_name(tier);
    out += rb_mode == RbMode::dedicated ? "-dedicated" : "-shared";
    return out;
}

LinkSpec parse_link(const std::string& text) {
    if (text == "rrh-dedicated") return LinkSpec::rrh_dedicated();
    if (text == "rrh-shared") return LinkSpec::rrh_shared();
    if (text == "mbs-shared") return LinkSpec::mbs_shared();
    if (text == "mbs-dedicated") throw ConfigError("MBS transmits only on shared resource blocks");
    throw ConfigError("unknown link '" + text + "' (expected rrh-dedicated, rrh-shared, mbs-shared)");
}

std::string tier_name(Tier tier) { return tier == Tier::rrh ? "rrh" : "mbs"; }

Tier parse_tier(const std::string& text) {
    if (text == "rrh" || text == "RRH") return Tier::rrh;
    if (text == "mbs" || text == "MBS") return Tier::mbs;
    throw ConfigError("unknown tier '" + text + "' (expected rrh or mbs)");
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) {
    if (!(watts > 0.0)) throw DomainError("watts_to_dbm: power must be > 0");
    return 10.0 * std::log10(watts) + 30.0;
}

double beta_pathloss_constant(double f_c) {
    if (!(f_c > 0.0)) throw DomainError("beta_pathloss_constant: f_c must be > 0");
    const double r = 3e8 / (4.0 * std::numbers::pi * f_c);
    return r * r;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void NetworkConfig::validate() const {
    require(finite_positive(lambda_m), "lambda_m must be > 0");
    require(finite_positive(lambda_r), "lambda_r must be > 0");
    require(std::isfinite(lambda_e) && lambda_e >= 0.0, "lambda_e must be >= 0");
    require(finite_positive(p_m), "p_m must be > 0");
    require(finite_positive(p_r), "p_r must be > 0");
    require(s_users >= 1, "s_users must be >= 1");
    require(n_m > s_users, "n_m must exceed s_users (N_M > S)");
    require(std::isfinite(eta_m) && eta_m > 2.0, "eta_m must satisfy eta > 2");
    require(std::isfinite(eta_r) && eta_r > 2.0, "eta_r must satisfy eta > 2");
    require(finite_positive(f_c), "f_c must be > 0");
    require(finite_positive(b_o), "b_o must be > 0");
    require(k_rb >= 0, "k_rb must be >= 0");
    require(std::isfinite(alpha) && alpha >= 0.0 && alpha <= 1.0, "alpha must lie in [0, 1]");
    require(finite_positive(n0), "n0 must be > 0");
    require(finite_positive(n1), "n1 must be > 0");
    require(finite_positive(ne), "ne must be > 0");
}

double NetworkConfig::mbs_eve_noise_power() const {
    return b_o * (mbs_eve_noise == EveNoiseSource::ne ? ne : n1);
}

void PowerModel::validate() const {
    require(std::isfinite(eps_r) && eps_r > 0.0 && eps_r <= 1.0, "eps_r must lie in (0, 1]");
    require(std::isfinite(eps_m) && eps_m > 0.0 && eps_m <= 1.0, "eps_m must lie in (0, 1]");
    require(std::isfinite(p_r0) && p_r0 >= 0.0, "p_r0 must be >= 0");
    require(std::isfinite(p_m0) && p_m0 >= 0.0, "p_m0 must be >= 0");
    require(std::isfinite(p_fh) && p_fh >= 0.0, "p_fh must be >= 0");
    require(std::isfinite(p_bh) && p_bh >= 0.0, "p_bh must be >= 0");
    for (int i = 0; i < 3; ++i) {
        require(std::isfinite(lambda_rho0[i]) && lambda_rho0[i] >= 0.0,
                "processing coefficients must be >= 0");
        require(std::isfinite(lambda_rho1[i]) && lambda_rho1[i] >= 0.0,
                "processing coefficients must be >= 0");
    }
}

std::pair<double, double> association_probabilities(const NetworkConfig& cfg) {
    const double total = cfg.lambda_r + cfg.lambda_m;
    if (!(total > 0.0)) throw DomainError("association_probabilities: zero total density");
    const double a_r = cfg.lambda_r / total;
    return {a_r, cfg.lambda_m / total};
}

double serving_distance_pdf(double x, Tier, const NetworkConfig& cfg) {
    if (x < 0.0) return 0.0;
    const double pl = std::numbers::pi * cfg.total_density();
    return 2.0 * pl * x * std::exp(-pl * x * x);
}

double serving_distance_cdf(double x, const NetworkConfig& cfg) {
    if (x <= 0.0) return 0.0;
    return -std::expm1(-std::numbers::pi * cfg.total_density() * x * x);
}

double rrh_total_power(const PowerModel& pm, const NetworkConfig& cfg) {
    return cfg.k_rb * cfg.p_r / pm.eps_r + pm.p_r0 + pm.p_fh;
}

double mbs_per_rb_power(const PowerModel& pm, const NetworkConfig& cfg) {
    const double s = cfg.s_users;
    const double n = cfg.n_m;
    double out = cfg.p_m / pm.eps_m;
    double s_pow = 1.0;  // S^(rho - 1)
    for (int rho = 0; rho < 3; ++rho) {
        out += s_pow * s * pm.lambda_rho0[rho] + s_pow * n * pm.lambda_rho1[rho];
        s_pow *= s;
    }
    return out;
}

double mbs_total_power(const PowerModel& pm, const NetworkConfig& cfg) {
    return (1.0 - cfg.alpha) * cfg.k_rb * mbs_per_rb_power(pm, cfg) + pm.p_m0 + pm.p_bh;
}

}  // namespace hetcran
