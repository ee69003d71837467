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

#include "hetcran/mcsim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include "hetcran/errors.hpp"

namespace hetcran {

namespace {

constexpr double kPi = std::numbers::pi;

// Stream purposes. Per-Eve streams use the top byte for the link and the
// low 24 bits for the Eve index.
constexpr std::uint32_t kUserPurpose = 1;
constexpr std::uint32_t kEveGeometryPurpose = 2;
constexpr std::uint32_t kAntitheticPurpose = 3;
constexpr std::uint32_t kPinnedPurpose = 0x10;
constexpr std::uint32_t kEveLinkBase = 0x01000000;

constexpr double kGridCell = 250.0;  // m

double log2p1(double x) { return std::log1p(x) / std::numbers::ln2; }

double dist(const Point& p) { return std::hypot(p.x, p.y); }

std::uint32_t eve_purpose(int link, std::size_t eve) {
    if (eve >= (1u << 24)) throw DomainError("too many eavesdroppers in one trial");
    return kEveLinkBase * static_cast<std::uint32_t>(link + 1) | static_cast<std::uint32_t>(eve);
}

struct Powers {
    double rrh;        // P_R beta
    double mbs;        // P_M beta / S
    double rrh_noise;  // B_o N_o
    double mbs_noise;  // B_o N_1
};

Powers powers_of(const NetworkConfig& cfg) {
    const double beta = cfg.beta();
    return {cfg.p_r * beta, cfg.p_m * beta / cfg.s_users, cfg.b_o * cfg.n0, cfg.b_o * cfg.n1};
}

double mbs_serving_gain(const NetworkConfig& cfg, bool mean_fading, PhiloxStream& rng) {
    const double shape = cfg.n_m - cfg.s_users + 1;
    return mean_fading ? shape : sample_gamma(shape, rng);
}

double mbs_field(const std::vector<Point>& mbs, std::size_t skip, const NetworkConfig& cfg,
                 const Powers& pw, PhiloxStream& rng) {
    double sum = 0.0;
    for (std::size_t j = 0; j < mbs.size(); ++j) {
        if (j == skip) continue;
        sum += sample_gamma(cfg.s_users, rng) * std::pow(dist(mbs[j]), -cfg.eta_m);
    }
    return pw.mbs * sum;
}

double rrh_field(const std::vector<Point>& rrh, const NetworkConfig& cfg, const Powers& pw,
                 PhiloxStream& rng) {
    double sum = 0.0;
    for (const auto& p : rrh) sum += rng.exponential() * std::pow(dist(p), -cfg.eta_r);
    return pw.rrh * sum;
}

std::size_t nearest(const std::vector<Point>& pts) {
    std::size_t best = pts.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < pts.size(); ++j) {
        const double d = dist(pts[j]);
        if (d < best_d) {
            best_d = d;
            best = j;
        }
    }
    return best;
}

struct ServingFading {
    double dedicated;
    double shared;
};

ServingFading rrh_serving_fading(long trial, const SimSpec& spec, PhiloxStream& rng) {
    if (!spec.antithetic) {
        const double a = rng.exponential();
        return {a, rng.exponential()};
    }
    PhiloxStream pair(spec.seed, kAntitheticPurpose, static_cast<std::uint64_t>(trial / 2));
    double u1 = pair.uniform();
    double u2 = pair.uniform();
    if (trial % 2 == 1) {
        u1 = 1.0 - u1;
        u2 = 1.0 - u2;
    }
    return {-std::log(u1), -std::log(u2)};
}

void fill_rrh_served(UserTrialOutcome& out, double d, const std::vector<Point>& mbs,
                     const NetworkConfig& cfg, const Powers& pw, const ServingFading& h,
                     PhiloxStream& rng) {
    out.serving_tier = Tier::rrh;
    out.serving_distance = d;
    const double path = pw.rrh * std::pow(d, -cfg.eta_r);
    out.sinr_dedicated = path * h.dedicated / pw.rrh_noise;
    const double im = mbs_field(mbs, mbs.size(), cfg, pw, rng);
    out.sinr_shared = path * h.shared / (im + pw.rrh_noise);
}

void fill_mbs_served(UserTrialOutcome& out, double d, const std::vector<Point>& mbs,
                     std::size_t serving, const std::vector<Point>& rrh, const NetworkConfig& cfg,
                     const Powers& pw, bool mean_fading, PhiloxStream& rng) {
    out.serving_tier = Tier::mbs;
    out.serving_distance = d;
    const double g = mbs_serving_gain(cfg, mean_fading, rng);
    const double im = mbs_field(mbs, serving, cfg, pw, rng);
    const double ir = rrh_field(rrh, cfg, pw, rng);
    out.sinr_shared = pw.mbs * g * std::pow(d, -cfg.eta_m) / (im + ir + pw.mbs_noise);
}

UserTrialOutcome user_trial(long i, const NetworkConfig& cfg, const SimSpec& spec,
                            const Powers& pw) {
    PhiloxStream rng(spec.seed, kUserPurpose, static_cast<std::uint64_t>(i));
    UserTrialOutcome out;
    const double R = spec.region_radius;
    if (spec.serving == ServingCondition::natural) {
        const auto mbs = sample_ppp(cfg.lambda_m, R, rng);
        const auto rrh = sample_ppp(cfg.lambda_r, R, rng);
        out.n_mbs = static_cast<int>(mbs.size());
        out.n_rrh = static_cast<int>(rrh.size());
        const std::size_t jm = nearest(mbs);
        const std::size_t jr = nearest(rrh);
        const double dm = jm < mbs.size() ? dist(mbs[jm]) : std::numeric_limits<double>::infinity();
        const double dr = jr < rrh.size() ? dist(rrh[jr]) : std::numeric_limits<double>::infinity();
        if (std::isinf(dm) && std::isinf(dr)) return out;
        out.valid = true;
        if (dr <= dm) {
            const ServingFading h = rrh_serving_fading(i, spec, rng);
            fill_rrh_served(out, dr, mbs, cfg, pw, h, rng);
        } else {
            fill_mbs_served(out, dm, mbs, jm, rrh, cfg, pw, spec.mbs_mean_fading, rng);
        }
        return out;
    }
    const double d = std::sqrt(-std::log(rng.uniform()) / (kPi * cfg.total_density()));
    if (d >= R) return out;
    const auto mbs = sample_ppp_annulus(cfg.lambda_m, d, R, rng);
    out.n_mbs = static_cast<int>(mbs.size());
    out.valid = true;
    if (spec.serving == ServingCondition::rrh) {
        const ServingFading h = rrh_serving_fading(i, spec, rng);
        fill_rrh_served(out, d, mbs, cfg, pw, h, rng);
        return out;
    }
    const auto rrh = sample_ppp_annulus(cfg.lambda_r, d, R, rng);
    out.n_rrh = static_cast<int>(rrh.size());
    fill_mbs_served(out, d, mbs, mbs.size(), rrh, cfg, pw, spec.mbs_mean_fading, rng);
    return out;
}

/// Uniform grid over [-R, R]^2 holding point indices per cell.
class Grid {
public:
    Grid(const std::vector<Point>& pts, double radius)
        : radius_(radius), n_(std::max(1, static_cast<int>(std::ceil(2.0 * radius / kGridCell)))),
          cells_(static_cast<std::size_t>(n_) * n_) {
        for (std::size_t j = 0; j < pts.size(); ++j)
            cells_[static_cast<std::size_t>(coord(pts[j].y)) * n_ + coord(pts[j].x)].push_back(
                static_cast<int>(j));
    }

    int size() const { return n_; }

    int coord(double v) const {
        return std::clamp(static_cast<int>(std::floor((v + radius_) / kGridCell)), 0, n_ - 1);
    }

    /// Visits the points of the cells at Chebyshev distance k from (x, y).
    template <class F>
    void for_each_in_ring(int x, int y, int k, F&& f) const {
        auto visit = [&](int xx, int yy) {
            if (xx < 0 || yy < 0 || xx >= n_ || yy >= n_) return;
            for (int j : cells_[static_cast<std::size_t>(yy) * n_ + xx]) f(j);
        };
        if (k == 0) {
            visit(x, y);
            return;
        }
        for (int xx = x - k; xx <= x + k; ++xx) {
            visit(xx, y - k);
            visit(xx, y + k);
        }
        for (int yy = y - k + 1; yy <= y + k - 1; ++yy) {
            visit(x - k, yy);
            visit(x + k, yy);
        }
    }

private:
    double radius_;
    int n_;
    std::vector<std::vector<int>> cells_;
};

double path_gain(const Point& a, const Point& b, double eta) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::pow(dx * dx + dy * dy, -0.5 * eta);
}

EveTrialOutcome eve_trial(long i, const NetworkConfig& cfg, const SimSpec& spec,
                          const Powers& pw) {
    const double R = spec.region_radius;
    PhiloxStream geo(spec.seed, kEveGeometryPurpose, static_cast<std::uint64_t>(i));
    const auto eves = sample_ppp(cfg.lambda_e, R, geo);
    const auto rrh = sample_ppp(cfg.lambda_r, R, geo);
    const auto mbs = sample_ppp(cfg.lambda_m, R, geo);
    EveTrialOutcome out;
    out.n_eve = static_cast<int>(eves.size());
    out.n_rrh = static_cast<int>(rrh.size());
    out.n_mbs = static_cast<int>(mbs.size());
    if (eves.empty()) return out;

    const Grid rrh_grid(rrh, R);
    const Grid mbs_grid(mbs, R);
    std::vector<double> signal(eves.size());
    std::vector<std::size_t> order(eves.size());
    for (int link = 0; link < 3; ++link) {
        const bool mbs_link = link == 2;
        const bool with_mbs = link != 0;
        const double p_sig = mbs_link ? pw.mbs : pw.rrh;
        const double eta_sig = mbs_link ? cfg.eta_m : cfg.eta_r;
        const double noise = mbs_link ? cfg.mbs_eve_noise_power() : cfg.b_o * cfg.ne;
        for (std::size_t e = 0; e < eves.size(); ++e) {
            PhiloxStream s(spec.seed, eve_purpose(link, e), static_cast<std::uint64_t>(i));
            signal[e] = p_sig * s.exponential() * std::pow(dist(eves[e]), -eta_sig);
        }
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return signal[a] > signal[b]; });
        double best = 0.0;
        for (std::size_t e : order) {
            if (signal[e] / noise <= best) break;
            PhiloxStream s(spec.seed, eve_purpose(link, e), static_cast<std::uint64_t>(i));
            s.exponential();
            const Point& at = eves[e];
            const int x = rrh_grid.coord(at.x);
            const int y = rrh_grid.coord(at.y);
            // Interference grows ring by ring, so every partial sum bounds the SINR.
            double interference = 0.0;
            bool pruned = false;
            for (int k = 0; k < rrh_grid.size(); ++k) {
                rrh_grid.for_each_in_ring(x, y, k, [&](int j) {
                    interference += pw.rrh * s.exponential() * path_gain(at, rrh[j], cfg.eta_r);
                });
                if (with_mbs)
                    mbs_grid.for_each_in_ring(x, y, k, [&](int j) {
                        interference += pw.mbs * sample_gamma(cfg.s_users, s) *
                                        path_gain(at, mbs[j], cfg.eta_m);
                    });
                if (signal[e] / (interference + noise) <= best) {
                    pruned = true;
                    break;
                }
            }
            if (!pruned) best = signal[e] / (interference + noise);
        }
        out.sinr_max[link] = best;
    }
    return out;
}

double sinr_of(const UserTrialOutcome& o, LinkSpec link) {
    return link == LinkSpec::rrh_dedicated() ? o.sinr_dedicated : o.sinr_shared;
}

bool uses_link(const UserTrialOutcome& o, LinkSpec link) {
    return o.valid && o.serving_tier == link.tier;
}

MetricEstimate pair_averaged(const std::vector<double>& values, const std::vector<char>& keep) {
    std::vector<double> pairs;
    for (std::size_t k = 0; k + 1 < values.size(); k += 2)
        if (keep[k] && keep[k + 1]) pairs.push_back(0.5 * (values[k] + values[k + 1]));
    return estimate_mean(pairs);
}

}  // namespace

std::vector<Point> sample_ppp(double density, double region_radius, PhiloxStream& rng) {
    return sample_ppp_annulus(density, 0.0, region_radius, rng);
}

std::vector<Point> sample_ppp_annulus(double density, double r_in, double r_out,
                                      PhiloxStream& rng) {
    if (!(density >= 0.0) || !(r_in >= 0.0) || !(r_out >= r_in))
        throw DomainError("sample_ppp_annulus: bad arguments");
    const double area = kPi * (r_out * r_out - r_in * r_in);
    const double mean = density * area;
    std::vector<Point> pts;
    if (mean <= 0.0) return pts;
    std::poisson_distribution<long> count(mean);
    const long n = count(rng);
    pts.reserve(static_cast<std::size_t>(n));
    const double a2 = r_in * r_in;
    const double span = r_out * r_out - a2;
    for (long k = 0; k < n; ++k) {
        const double r = std::sqrt(a2 + rng.uniform() * span);
        const double theta = 2.0 * kPi * rng.uniform();
        pts.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
    return pts;
}

double sample_gamma(double shape, PhiloxStream& rng) {
    if (shape == 1.0) return rng.exponential();
    std::gamma_distribution<double> g(shape, 1.0);
    return g(rng);
}

int link_index(LinkSpec link) {
    link.validate();
    if (link.tier == Tier::mbs) return 2;
    return link.rb_mode == RbMode::dedicated ? 0 : 1;
}

UserTrialSummary run_user_trials(const NetworkConfig& cfg, const SimSpec& spec) {
    cfg.validate();
    spec.validate();
    const Powers pw = powers_of(cfg);
    UserTrialSummary out;
    out.antithetic = spec.antithetic;
    out.outcomes.resize(static_cast<std::size_t>(spec.n_trials));
    parallel_for_index(spec.n_trials, spec.resolved_workers(),
                       [&](long i) { out.outcomes[i] = user_trial(i, cfg, spec, pw); });

    const std::size_t n = out.outcomes.size();
    std::vector<double> ck(n), cnu(n), comb(n);
    std::vector<char> rrh_served(n, 0);
    std::vector<double> ck_v, cnu_v, comb_v, cm_v;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& o = out.outcomes[i];
        if (!o.valid) continue;
        ++out.n_valid;
        if (o.serving_tier == Tier::rrh) {
            ++out.n_rrh_served;
            rrh_served[i] = 1;
            ck[i] = log2p1(o.sinr_dedicated);
            cnu[i] = log2p1(o.sinr_shared);
            comb[i] = cfg.alpha * ck[i] + (1.0 - cfg.alpha) * cnu[i];
            ck_v.push_back(ck[i]);
            cnu_v.push_back(cnu[i]);
            comb_v.push_back(comb[i]);
        } else {
            ++out.n_mbs_served;
            cm_v.push_back(log2p1(o.sinr_shared));
        }
    }
    out.association_rrh = estimate_proportion(out.n_rrh_served, out.n_valid);
    if (spec.antithetic) {
        out.capacity_rrh_dedicated = pair_averaged(ck, rrh_served);
        out.capacity_rrh_shared = pair_averaged(cnu, rrh_served);
        out.capacity_rrh_combined = pair_averaged(comb, rrh_served);
    } else {
        out.capacity_rrh_dedicated = estimate_mean(ck_v);
        out.capacity_rrh_shared = estimate_mean(cnu_v);
        out.capacity_rrh_combined = estimate_mean(comb_v);
    }
    out.capacity_mbs = estimate_mean(cm_v);
    return out;
}

EveTrialSummary run_eve_trials(const NetworkConfig& cfg, const SimSpec& spec) {
    cfg.validate();
    spec.validate();
    const Powers pw = powers_of(cfg);
    EveTrialSummary out;
    out.outcomes.resize(static_cast<std::size_t>(spec.n_trials));
    parallel_for_index(spec.n_trials, spec.resolved_workers(),
                       [&](long i) { out.outcomes[i] = eve_trial(i, cfg, spec, pw); });
    std::array<std::vector<double>, 3> caps;
    std::vector<double> comb;
    comb.reserve(out.outcomes.size());
    for (const auto& o : out.outcomes) {
        if (o.n_eve == 0) ++out.n_empty;
        for (int l = 0; l < 3; ++l) caps[l].push_back(log2p1(o.sinr_max[l]));
        comb.push_back(cfg.alpha * caps[0].back() + (1.0 - cfg.alpha) * caps[1].back());
    }
    for (int l = 0; l < 3; ++l) out.capacity[l] = estimate_mean(caps[l]);
    out.capacity_rrh_combined = estimate_mean(comb);
    return out;
}

MetricEstimate user_ccdf_estimate(const UserTrialSummary& users, LinkSpec link, double gamma) {
    link.validate();
    long n = 0;
    long above = 0;
    for (const auto& o : users.outcomes) {
        if (!uses_link(o, link)) continue;
        ++n;
        if (sinr_of(o, link) > gamma) ++above;
    }
    return estimate_proportion(above, n);
}

MetricEstimate eve_cdf_estimate(const EveTrialSummary& eves, LinkSpec link, double x) {
    const int l = link_index(link);
    long below = 0;
    for (const auto& o : eves.outcomes)
        if (o.sinr_max[l] <= x) ++below;
    return estimate_proportion(below, static_cast<long>(eves.outcomes.size()));
}

std::vector<double> fixed_distance_sinr_samples(LinkSpec link, double d_o, const NetworkConfig& cfg,
                                                const SimSpec& spec) {
    link.validate();
    cfg.validate();
    spec.validate();
    if (!(d_o > 0.0) || !(d_o < spec.region_radius))
        throw DomainError("serving distance must lie in (0, region radius)");

    if (spec.conditioning == OutageConditioning::bucketed) {
        SimSpec natural = spec;
        natural.serving = ServingCondition::natural;
        const auto users = run_user_trials(cfg, natural);
        std::vector<double> out;
        for (const auto& o : users.outcomes)
            if (uses_link(o, link) && std::abs(o.serving_distance - d_o) <= 0.05 * d_o)
                out.push_back(sinr_of(o, link));
        if (out.empty()) throw DomainError("no trials fell in the serving-distance bucket");
        return out;
    }

    const Powers pw = powers_of(cfg);
    const int l = link_index(link);
    const double R = spec.region_radius;
    std::vector<double> out(static_cast<std::size_t>(spec.n_trials));
    parallel_for_index(spec.n_trials, spec.resolved_workers(), [&](long i) {
        PhiloxStream rng(spec.seed, kPinnedPurpose + static_cast<std::uint32_t>(l),
                         static_cast<std::uint64_t>(i));
        if (l == 0) {
            out[i] = pw.rrh * rng.exponential() * std::pow(d_o, -cfg.eta_r) / pw.rrh_noise;
        } else if (l == 1) {
            const double h = rng.exponential();
            const auto mbs = sample_ppp_annulus(cfg.lambda_m, d_o, R, rng);
            const double im = mbs_field(mbs, mbs.size(), cfg, pw, rng);
            out[i] = pw.rrh * h * std::pow(d_o, -cfg.eta_r) / (im + pw.rrh_noise);
        } else {
            const double g = mbs_serving_gain(cfg, spec.mbs_mean_fading, rng);
            const auto mbs = sample_ppp_annulus(cfg.lambda_m, d_o, R, rng);
            const auto rrh = sample_ppp_annulus(cfg.lambda_r, d_o, R, rng);
            const double im = mbs_field(mbs, mbs.size(), cfg, pw, rng);
            const double ir = rrh_field(rrh, cfg, pw, rng);
            out[i] = pw.mbs * g * std::pow(d_o, -cfg.eta_m) / (im + ir + pw.mbs_noise);
        }
    });
    return out;
}

OutageEstimates estimate_outages(LinkSpec link, double rate, double secrecy_rate_target,
                                 double d_o, const NetworkConfig& cfg, const SimSpec& spec) {
    if (!(rate > 0.0)) throw DomainError("rate must be > 0");
    if (!(secrecy_rate_target > 0.0 && secrecy_rate_target <= rate))
        throw DomainError("secrecy rate target must lie in (0, rate]");
    OutageEstimates out;
    out.connection_outage = outage_fraction(fixed_distance_sinr_samples(link, d_o, cfg, spec), rate);
    const auto eves = run_eve_trials(cfg, spec);
    const double x = std::exp2(rate - secrecy_rate_target) - 1.0;
    const MetricEstimate below = eve_cdf_estimate(eves, link, x);
    out.secrecy_outage = below;
    out.secrecy_outage.value = 1.0 - below.value;
    return out;
}

MetricEstimate area_secrecy_rate_estimate(Tier tier, const NetworkConfig& cfg,
                                          const UserTrialSummary& users,
                                          const EveTrialSummary& eves) {
    cfg.validate();
    const double kb = cfg.k_rb * cfg.b_o;
    MetricEstimate out;
    out.n_effective = std::min<long>(tier == Tier::rrh ? users.capacity_rrh_combined.n_effective
                                                       : users.capacity_mbs.n_effective,
                                     static_cast<long>(eves.outcomes.size()));
    auto combine = [](const MetricEstimate& a, const MetricEstimate& b) {
        return std::hypot(a.std_error, b.std_error);
    };
    if (tier == Tier::mbs) {
        const double scale = cfg.lambda_m * (1.0 - cfg.alpha) * kb * cfg.s_users;
        const double d = users.capacity_mbs.value - eves.capacity[2].value;
        out.value = scale * std::max(d, 0.0);
        out.std_error = scale * combine(users.capacity_mbs, eves.capacity[2]);
        return out;
    }
    const double scale = cfg.lambda_r * kb;
    const double a = cfg.alpha;
    const double dk = users.capacity_rrh_dedicated.value - eves.capacity[0].value;
    const double dnu = users.capacity_rrh_shared.value - eves.capacity[1].value;
    out.value = scale * (a * std::max(dk, 0.0) + (1.0 - a) * std::max(dnu, 0.0));
    const bool k_active = a > 0.0 && dk > 0.0;
    const bool nu_active = a < 1.0 && dnu > 0.0;
    double se;
    if (k_active == nu_active && a > 0.0 && a < 1.0)
        se = combine(users.capacity_rrh_combined, eves.capacity_rrh_combined);
    else if (k_active || (!nu_active && a == 1.0))
        se = a * combine(users.capacity_rrh_dedicated, eves.capacity[0]);
    else
        se = (1.0 - a) * combine(users.capacity_rrh_shared, eves.capacity[1]);
    out.std_error = scale * se;
    return out;
}

MetricEstimate paired_secrecy_rate_estimate(LinkSpec link, const UserTrialSummary& users,
                                            const EveTrialSummary& eves) {
    const int l = link_index(link);
    const std::size_t n = std::min(users.outcomes.size(), eves.outcomes.size());
    std::vector<double> values;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& o = users.outcomes[i];
        if (!uses_link(o, link)) continue;
        values.push_back(
            std::max(log2p1(sinr_of(o, link)) - log2p1(eves.outcomes[i].sinr_max[l]), 0.0));
    }
    return estimate_mean(values);
}

void write_user_trials_csv(std::ostream& out, const std::vector<UserTrialOutcome>& outcomes) {
    out << "trial,valid,serving_tier,serving_distance,sinr_dedicated,sinr_shared,n_mbs,n_rrh\n";
    const auto old = out.precision(17);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& o = outcomes[i];
        out << i << ',' << (o.valid ? 1 : 0) << ',' << tier_name(o.serving_tier) << ','
            << o.serving_distance << ',' << o.sinr_dedicated << ',' << o.sinr_shared << ','
            << o.n_mbs << ',' << o.n_rrh << '\n';
    }
    out.precision(old);
}

void write_eve_trials_csv(std::ostream& out, const std::vector<EveTrialOutcome>& outcomes) {
    out << "trial,n_eve,n_rrh,n_mbs,sinr_rrh_dedicated,sinr_rrh_shared,sinr_mbs_shared\n";
    const auto old = out.precision(17);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& o = outcomes[i];
        out << i << ',' << o.n_eve << ',' << o.n_rrh << ',' << o.n_mbs << ',' << o.sinr_max[0]
            << ',' << o.sinr_max[1] << ',' << o.sinr_max[2] << '\n';
    }
    out.precision(old);
}

}  // namespace hetcran
