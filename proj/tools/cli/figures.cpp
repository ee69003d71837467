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

#include "cli/figures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "hetcran/analytic.hpp"
#include "hetcran/errors.hpp"

namespace hetcran::cli {

namespace {

constexpr double kLambdaO = 1.0 / (500.0 * 500.0 * std::numbers::pi);

using Metrics = std::vector<std::pair<std::string, double>>;
using McMetrics = std::vector<std::pair<std::string, MetricEstimate>>;

struct Series {
    std::string label;
    std::function<void(NetworkConfig&)> apply;
};

/// One sweep point handed to a preset's metric functions.
struct Job {
    const NetworkConfig& cfg;
    const PowerModel& power;
    const std::string& series;
    double value;
};

class Sweep;

struct Preset {
    FigureInfo info;
    std::string parameter;
    std::vector<double> values;
    std::vector<std::string> keys;  // config keys the preset assigns
    std::function<void(NetworkConfig&)> caption;
    std::vector<Series> series;
    std::function<void(NetworkConfig&, double)> set;
    std::function<Metrics(const Job&)> analytic;
    std::function<McMetrics(const Job&, const SimSpec&)> mc;
    std::function<void(const Sweep&, std::vector<TrendCheck>&)> trends;
};

/// Analytic values indexed by (series, metric) along the sweep grid.
class Sweep {
public:
    Sweep(int figure, std::string parameter) : figure_(figure), parameter_(std::move(parameter)) {}

    void put(const std::string& series, const std::string& metric, std::size_t i,
             std::size_t n, double v) {
        auto& curve = data_[{series, metric}];
        curve.resize(n, NAN);
        curve[i] = v;
    }

    const std::vector<double>& curve(const std::string& series, const std::string& metric) const {
        const auto it = data_.find({series, metric});
        if (it == data_.end()) throw DomainError("no curve " + metric + " for " + series);
        return it->second;
    }

    std::string describe(const std::string& what, const std::string& series) const {
        return "figure " + std::to_string(figure_) + ": " + what + " [" + series + "]";
    }

    const std::string& parameter() const { return parameter_; }

private:
    int figure_;
    std::string parameter_;
    std::map<std::pair<std::string, std::string>, std::vector<double>> data_;
};

bool strictly(const std::vector<double>& c, bool up) {
    for (std::size_t i = 1; i < c.size(); ++i)
        if (up ? !(c[i] > c[i - 1]) : !(c[i] < c[i - 1])) return false;
    return true;
}

bool weakly_increasing(const std::vector<double>& c) {
    for (std::size_t i = 1; i < c.size(); ++i)
        if (!(c[i] >= c[i - 1])) return false;
    return true;
}

bool constant(const std::vector<double>& c, double rel = 1e-9) {
    for (double v : c)
        if (!(std::abs(v - c.front()) <= rel * std::abs(c.front()))) return false;
    return true;
}

bool pointwise_less(const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] < b[i])) return false;
    return true;
}

void monotone(const Sweep& s, std::vector<TrendCheck>& out, const std::string& series,
              const std::string& metric, bool up) {
    out.push_back({s.describe(metric + (up ? " increasing in " : " decreasing in ") + s.parameter(),
                              series),
                   strictly(s.curve(series, metric), up)});
}

void flat(const Sweep& s, std::vector<TrendCheck>& out, const std::string& series,
          const std::string& metric) {
    out.push_back({s.describe(metric + " constant in " + s.parameter(), series),
                   constant(s.curve(series, metric))});
}

void below(const Sweep& s, std::vector<TrendCheck>& out, const std::string& metric,
           const std::string& lower, const std::string& upper) {
    out.push_back({s.describe(metric + " below " + upper, lower),
                   pointwise_less(s.curve(lower, metric), s.curve(upper, metric))});
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

Metrics area_rates(const Job& j) {
    const NetworkConfig& c = j.cfg;
    return {{"area_secrecy_rate_rrh", area_secrecy_rate(Tier::rrh, c)},
            {"area_secrecy_rate_mbs", area_secrecy_rate(Tier::mbs, c)}};
}

McMetrics mc_area_rates(const Job& j, const SimSpec& spec) {
    const NetworkConfig& c = j.cfg;
    SimSpec natural = spec;
    natural.serving = ServingCondition::natural;
    const auto users = run_user_trials(c, natural);
    const auto eves = run_eve_trials(c, spec);
    return {{"area_secrecy_rate_rrh", area_secrecy_rate_estimate(Tier::rrh, c, users, eves)},
            {"area_secrecy_rate_mbs", area_secrecy_rate_estimate(Tier::mbs, c, users, eves)}};
}

Metrics energy(const Job& j) {
    const auto e = energy_efficiency(j.cfg, j.power);
    return {{"ee_rrh", e.ee_rrh},
            {"ee_rrh_approx", e.ee_rrh_approx},
            {"ee_mbs", e.ee_mbs},
            {"ee_mbs_exact", e.ee_mbs_exact},
            {"ee_network", e.ee_network}};
}

LinkSpec series_link(const std::string& label) {
    return label.rfind("rrh-shared", 0) == 0 ? LinkSpec::rrh_shared() : LinkSpec::rrh_dedicated();
}

const std::vector<double> kDensityGrid = {1, 2, 5, 10, 20, 50};
const std::vector<double> kAntennaGrid = {100, 200, 300, 400, 500};
const std::vector<double> kAlphaGrid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

std::vector<Preset> build_presets() {
    std::vector<Preset> p;

    {  // 1
        Preset f;
        f.info = {1, "area ergodic secrecy rate versus MBS antennas", 10000};
        f.parameter = "n_m";
        f.values = kAntennaGrid;
        f.keys = {"lambda_m", "lambda_r", "lambda_e", "eta_m", "eta_r", "alpha", "n_m", "s_users"};
        f.caption = [](NetworkConfig& c) {
            c.lambda_m = kLambdaO;
            c.lambda_e = 1e-5;
            c.eta_m = 3.0;
            c.eta_r = 3.6;
            c.alpha = 0.5;
        };
        for (int mult : {10, 20})
            for (int s : {15, 30})
                f.series.push_back({"S=" + std::to_string(s) + " lambda_r=" +
                                        std::to_string(mult) + "lambda_m",
                                    [s, mult](NetworkConfig& c) {
                                        c.s_users = s;
                                        c.lambda_r = mult * c.lambda_m;
                                    }});
        f.set = [](NetworkConfig& c, double v) { c.n_m = static_cast<int>(v); };
        f.analytic = area_rates;
        f.mc = mc_area_rates;
        f.trends = [](const Sweep& s, std::vector<TrendCheck>& out) {
            for (const char* m : {"10", "20"}) {
                const std::string lo = std::string("S=15 lambda_r=") + m + "lambda_m";
                const std::string hi = std::string("S=30 lambda_r=") + m + "lambda_m";
                for (const auto& series : {lo, hi}) {
                    flat(s, out, series, "area_secrecy_rate_rrh");
                    monotone(s, out, series, "area_secrecy_rate_mbs", true);
                }
                below(s, out, "area_secrecy_rate_mbs", lo, hi);
            }
            below(s, out, "area_secrecy_rate_rrh", "S=30 lambda_r=10lambda_m",
                  "S=30 lambda_r=20lambda_m");
        };
        p.push_back(std::move(f));
    }
    {  // 2
        Preset f;
        f.info = {2, "MBS secrecy and connection outage versus served users", 100000};
        f.parameter = "s_users";
        f.values = {5, 10, 15, 20, 25, 30, 35, 40};
        f.keys = {"lambda_m", "lambda_r", "lambda_e", "eta_m", "eta_r", "n_m", "s_users"};
        f.caption = [](NetworkConfig& c) {
            c.lambda_m = kLambdaO;
            c.lambda_r = 20.0 * kLambdaO;
            c.eta_m = 3.0;
            c.eta_r = 3.6;
        };
        for (double le : {1e-5, 1e-4})
            for (int nm : {200, 400})
                f.series.push_back({"N_M=" + std::to_string(nm) + " lambda_e=" + fmt(le),
                                    [nm, le](NetworkConfig& c) {
                                        c.n_m = nm;
                                        c.lambda_e = le;
                                    }});
        f.set = [](NetworkConfig& c, double v) { c.s_users = static_cast<int>(v); };
        f.analytic = [](const Job& j) -> Metrics {
            const LinkSpec l = LinkSpec::mbs_shared();
            return {{"connection_outage", connection_outage(l, 8.0, 50.0, j.cfg)},
                    {"secrecy_outage", secrecy_outage(l, 8.0, 2.4, j.cfg)}};
        };
        f.mc = [](const Job& j, const SimSpec& spec) -> McMetrics {
            const auto sinr = fixed_distance_sinr_samples(LinkSpec::mbs_shared(), 50.0, j.cfg, spec);
            return {{"connection_outage", outage_fraction(sinr, 8.0)}};
        };
        f.trends = [](const Sweep& s, std::vector<TrendCheck>& out) {
            for (const char* le : {"1e-05", "0.0001"}) {
                const std::string n200 = std::string("N_M=200 lambda_e=") + le;
                const std::string n400 = std::string("N_M=400 lambda_e=") + le;
                for (const auto& series : {n200, n400}) {
                    monotone(s, out, series, "secrecy_outage", false);
                    monotone(s, out, series, "connection_outage", true);
                }
                below(s, out, "connection_outage", n400, n200);
                out.push_back({s.describe("secrecy_outage independent of N_M", n200),
                               s.curve(n200, "secrecy_outage") == s.curve(n400, "secrecy_outage")});
            }
            below(s, out, "secrecy_outage", "N_M=400 lambda_e=1e-05", "N_M=400 lambda_e=0.0001");
        };
        p.push_back(std::move(f));
    }
    {  // 3
        Preset f;
        f.info = {3, "eavesdropper and MBS user capacity versus MBS antennas", 0};
        f.parameter = "n_m";
        f.values = kAntennaGrid;
        f.keys = {"lambda_m", "lambda_r", "lambda_e", "eta_m", "n_m", "s_users"};
        f.caption = [](NetworkConfig& c) {
            c.lambda_m = kLambdaO;
            c.lambda_r = 20.0 * kLambdaO;
            c.lambda_e = 1e-5;
            c.eta_m = 3.3;
        };
        for (int s : {15, 30})
            f.series.push_back({"S=" + std::to_string(s), [s](NetworkConfig& c) { c.s_users = s; }});
        f.set = [](NetworkConfig& c, double v) { c.n_m = static_cast<int>(v); };
        f.analytic = [](const Job& j) -> Metrics {
            return {{"eve_capacity_mbs-shared", eve_ergodic_capacity(LinkSpec::mbs_shared(), j.cfg)},
                    {"capacity_mbs-shared_bound", mbs_capacity_lower_bound(j.cfg)}};
        };
        f.trends = [](const Sweep& s, std::vector<TrendCheck>& out) {
            for (const char* series : {"S=15", "S=30"}) {
                flat(s, out, series, "eve_capacity_mbs-shared");
                monotone(s, out, series, "capacity_mbs-shared_bound", true);
            }
            below(s, out, "eve_capacity_mbs-shared", "S=30", "S=15");
            below(s, out, "capacity_mbs-shared_bound", "S=30", "S=15");
        };
        p.push_back(std::move(f));
    }
    {  // 4
        Preset f;
        f.info = {4, "energy efficiency versus MBS antennas", 0};
        f.parameter = "n_m";
        f.values = kAntennaGrid;
        f.keys = {"lambda_m", "lambda_r", "eta_m", "eta_r", "alpha", "n_m", "s_users"};
        f.caption = [](NetworkConfig& c) {
            c.lambda_m = kLambdaO;
            c.lambda_r = 20.0 * kLambdaO;
            c.eta_m = 3.2;
            c.eta_r = 3.6;
            c.alpha = 0.5;
        };
        for (int s : {15, 30})
            f.series.push_back({"S=" + std::to_string(s), [s](NetworkConfig& c) { c.s_users = s; }});
        f.set = [](NetworkConfig& c, double v) { c.n_m = static_cast<int>(v); };
        f.analytic = energy;
        f.trends = [](const Sweep& s, std::vector<TrendCheck>& out) {
            for (const char* series : {"S=15", "S=30"}) {
                monotone(s, out, series, "ee_mbs", false);
                flat(s, out, series, "ee_rrh");
                out.push_back({s.describe("ee_mbs below ee_rrh", series),
                               pointwise_less(s.curve(series, "ee_mbs"), s.curve(series, "ee_rrh"))});
            }
            below(s, out, "ee_mbs", "S=15", "S=30");
        };
        p.push_back(std::move(f));
    }
    {  // 5
        Preset f;
        f.info = {5, "area ergodic secrecy rate versus RRH density", 0};
        f.parameter = "lambda_r_multiple";
        f.values = kDensityGrid;
        f.keys = {"lambda_m", "lambda_r", "lambda_e", "eta_m", "eta_r", "alpha", "n_m", "s_users"};
        f.caption = [](NetworkConfig& c) {
            c.lambda_e = 1e-5;
            c.n_m = 400;
            c.s_users = 30;
            c.eta_m = 3.0;
            c.eta_r = 3.6;
            c.alpha = 0.7;
        };
        for (int m : {1, 2})
            f.series.push_back({"lambda_m=" + std::to_string(m) + "lambda_o",
                                [m](NetworkConfig& c) { c.lambda_m = m * kLambdaO; }});
        f.set = [](NetworkConfig& c, double v) { c.lambda_r = v * kLambdaO; };
        f.analytic = area_rates;
        f.trends = [](const Sweep& s, std::vector<TrendCheck>& out) {
            for (const char* series : {"lambda_m=1lambda_o", "lambda_m=2lambda_o"})
                monotone(s, out, series, "area_secrecy_rate_rrh", true);
        };
        p.push_back(std::move(f));
    }
    {  // 6
        Preset f;
        f.info = {6, "RRH secrecy and connection outage versus rate", 100000};
        f.parameter = "rate";
        f.values = {1, 2, 4, 6, 8, 10};
        f.keys = {"lambda_m", "lambda_r", "lambda_e", "eta_m", "eta_r", "n_m", "s_users"};
        f.caption = [](NetworkConfig& c) {
            c.lambda_m = kLambdaO;
            c.lambda_e = 1e-4;
            c.n_m = 200;
            c.s_users = 15;
            c.eta_m = 3.0;
            c.eta_r = 3.6;
        };
        for (const char* link : {"rrh-dedicated", "rrh-shared"})
            for (int m : {20, 40})
                f.series.push_back({std::string(link) + " lambda_r=" + std::to_string(m) + "lambda_o",
                                    [m](NetworkConfig& c) { c.lambda_r = m * kLambdaO; }});
        // The rate is not a config field; metrics read it from the sweep value.
        f.set = [](NetworkConfig&, double) {};
        f.analytic = [](const Job& j) -> Metrics {
            const LinkSpec l = series_link(j.series);
            return {{"connection_outage", connection_outage(l, j.value, 30.0, j.cfg)},
                    {"secrecy_outage", secrecy_outage(l, j.value, 0.2 * j.value, j.cfg)}};
        };
        f.mc = [](const Job& j, const SimSpec& spec) -> McMetrics {
            const auto sinr = fixed_distance_sinr_samples(series_link(j.series), 30.0, j.cfg, spec);
            return {{"connection_outage", outage_fraction(sinr, j.value)}};
        };
        f.trends = [](const Sweep& s, std::vector<TrendCheck>& out) {
            for (const char* link : {"rrh-dedicated", "rrh-shared"}) {
                const std::string lo = std::string(link) + " lambda_r=20lambda_o";
                const std::string hi = std::string(link) + " lambda_r=40lambda_o";
                below(s, out, "secrecy_outage", hi, lo);
                out.push_back({s.describe("connection_outage independent of lambda_r", lo),
                               s.curve(lo, "connection_outage") == s.curve(hi, "connection_outage")});
                out.push_back({s.describe("connection_outage nondecreasing in rate", lo),
                               weakly_increasing(s.curve(lo, "connection_outage"))});
            }
            const auto& ded = s.curve("rrh-dedicated lambda_r=20lambda_o", "connection_outage");
            const auto& sh = s.curve("rrh-shared lambda_r=20lambda_o", "connection_outage");
            bool ok = true;
            for (std::size_t i = 0; i < ded.size(); ++i) ok = ok && ded[i] <= sh[i];
            out.push_back({s.describe("dedicated connection_outage at most shared", "lambda_r=20lambda_o"),
                           ok});
        };
        p.push_back(std::move(f));
    }
    {  // 7
        Preset f;
        f.info = {7, "eavesdropper and C-RAN user capacity versus RRH density", 0};
        f.parameter = "lambda_r_multiple";
        f.values = kDensityGrid;
        f.keys = {"lambda_m", "lambda_r", "lambda_e", "eta_m", "eta_r", "n_m", "s_users"};
        f.caption = [](NetworkConfig& c) {
            c.lambda_m = kLambdaO;
            c.lambda_e = 1e-4;
            c.n_m = 200;
            c.s_users = 15;
            c.eta_m = 3.5;
            c.eta_r = 3.2;
        };
        f.series.push_back({"all links", [](NetworkConfig&) {}});
        f.set = [](NetworkConfig& c, double v) { c.lambda_r = v * kLambdaO; };
        f.analytic = [](const Job& j) -> Metrics {
            Metrics m;
            for (const auto link : {LinkSpec::rrh_dedicated(), LinkSpec::rrh_shared()}) {
                m.push_back({"eve_capacity_" + link.name(), eve_ergodic_capacity(link, j.cfg)});
                m.push_back({"capacity_" + link.name(), user_ergodic_capacity(link, j.cfg)});
            }
            return m;
        };
        f.trends = [](const Sweep& s, std::vector<TrendCheck>& out) {
            for (const char* link : {"rrh-dedicated", "rrh-shared"}) {
                monotone(s, out, "all links", std::string("eve_capacity_") + link, false);
                monotone(s, out, "all links", std::string("capacity_") + link, true);
            }
        };
        p.push_back(std::move(f));
    }
    {  // 8
        Preset f;
        f.info = {8, "energy efficiency versus RRH density", 0};
        f.parameter = "lambda_r_multiple";
        f.values = kDensityGrid;
        f.keys = {"lambda_m", "lambda_r", "eta_m", "eta_r", "alpha", "n_m", "s_users"};
        f.caption = [](NetworkConfig& c) {
            c.n_m = 400;
            c.s_users = 30;
            c.eta_m = 3.0;
            c.eta_r = 3.6;
            c.alpha = 0.7;
        };
        for (int m : {1, 2})
            f.series.push_back({"lambda_m=" + std::to_string(m) + "lambda_o",
                                [m](NetworkConfig& c) { c.lambda_m = m * kLambdaO; }});
        f.set = [](NetworkConfig& c, double v) { c.lambda_r = v * kLambdaO; };
        f.analytic = energy;
        f.trends = [](const Sweep& s, std::vector<TrendCheck>& out) {
            for (const char* series : {"lambda_m=1lambda_o", "lambda_m=2lambda_o"}) {
                monotone(s, out, series, "ee_rrh", true);
                monotone(s, out, series, "ee_network", true);
            }
        };
        p.push_back(std::move(f));
    }
    for (int id : {9, 10}) {
        Preset f;
        f.info = {id,
                  id == 9 ? "area ergodic secrecy rate versus RRH resource-block fraction"
                          : "energy efficiency versus RRH resource-block fraction",
                  0};
        f.parameter = "alpha";
        f.values = kAlphaGrid;
        f.keys = {"lambda_m", "lambda_r", "lambda_e", "eta_m", "eta_r", "alpha", "n_m", "s_users"};
        f.caption = [](NetworkConfig& c) {
            c.lambda_m = kLambdaO;
            c.lambda_e = 5e-5;
            c.n_m = 400;
            c.s_users = 25;
            c.eta_m = 3.5;
            c.eta_r = 3.3;
        };
        for (int m : {5, 20})
            f.series.push_back({"lambda_r=" + std::to_string(m) + "lambda_m",
                                [m](NetworkConfig& c) { c.lambda_r = m * c.lambda_m; }});
        f.set = [](NetworkConfig& c, double v) { c.alpha = v; };
        if (id == 9) {
            f.analytic = area_rates;
            f.trends = [](const Sweep& s, std::vector<TrendCheck>& out) {
                for (const char* series : {"lambda_r=5lambda_m", "lambda_r=20lambda_m"}) {
                    monotone(s, out, series, "area_secrecy_rate_rrh", true);
                    monotone(s, out, series, "area_secrecy_rate_mbs", false);
                }
            };
        } else {
            f.analytic = energy;
            f.trends = [](const Sweep& s, std::vector<TrendCheck>& out) {
                for (const char* series : {"lambda_r=5lambda_m", "lambda_r=20lambda_m"}) {
                    const double r2 = linear_r_squared(kAlphaGrid, s.curve(series, "ee_rrh_approx"));
                    out.push_back({s.describe("ee_rrh_approx linear in alpha (R^2 > 0.999)", series),
                                   r2 > 0.999});
                    flat(s, out, series, "ee_mbs");
                }
            };
        }
        p.push_back(std::move(f));
    }
    return p;
}

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = build_presets();
    return all;
}

std::string join(const std::vector<double>& v) {
    std::string s;
    for (double x : v) s += (s.empty() ? "" : ",") + fmt(x);
    return s;
}

}  // namespace

double linear_r_squared(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw DomainError("linear_r_squared: bad sizes");
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (syy == 0.0) return 1.0;
    return sxy * sxy / (sxx * syy);
}

const std::vector<FigureInfo>& figure_presets() {
    static const std::vector<FigureInfo> infos = [] {
        std::vector<FigureInfo> v;
        for (const auto& f : presets()) v.push_back(f.info);
        return v;
    }();
    return infos;
}

FigureRun reproduce_figure(int figure, const LoadedConfig& base, const SimSpec& spec, bool with_mc) {
    const auto& all = presets();
    const auto it = std::find_if(all.begin(), all.end(),
                                 [&](const Preset& f) { return f.info.id == figure; });
    if (it == all.end())
        throw ConfigError("unknown figure " + std::to_string(figure) + " (expected 1..10)");
    const Preset& f = *it;
    const bool mc = with_mc && f.info.default_trials > 0;

    struct Point {
        std::size_t series;
        std::size_t index;
        NetworkConfig cfg;
        Metrics analytic;
        McMetrics mc;
    };
    std::vector<Point> points;
    for (std::size_t s = 0; s < f.series.size(); ++s)
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            NetworkConfig c = base.network;
            f.caption(c);
            f.series[s].apply(c);
            f.set(c, f.values[i]);
            c.validate();
            points.push_back({s, i, c, {}, {}});
        }

    parallel_for_index(static_cast<long>(points.size()), spec.resolved_workers(), [&](long k) {
        auto& pt = points[k];
        pt.analytic = f.analytic({pt.cfg, base.power, f.series[pt.series].label, f.values[pt.index]});
    });
    if (mc)
        for (auto& pt : points)
            pt.mc = f.mc({pt.cfg, base.power, f.series[pt.series].label, f.values[pt.index]}, spec);

    FigureRun run;
    run.table.columns = {"swept_parameter", "sweep_value", "series", "metric",
                         "engine",          "value",       "stderr"};
    Sweep sweep(f.info.id, f.parameter);
    for (const auto& pt : points) {
        const std::string& label = f.series[pt.series].label;
        for (const auto& [metric, v] : pt.analytic) {
            run.table.add({f.parameter, f.values[pt.index], label, metric, std::string("analytic"), v,
                           std::monostate{}});
            sweep.put(label, metric, pt.index, f.values.size(), v);
        }
        for (const auto& [metric, e] : pt.mc)
            run.table.add({f.parameter, f.values[pt.index], label, metric, std::string("mc"), e.value,
                           e.std_error});
    }
    f.trends(sweep, run.trends);

    long passed = 0;
    for (const auto& t : run.trends) passed += t.passed ? 1 : 0;
    run.notes = {{"figure", std::to_string(f.info.id)},
                 {"title", f.info.title},
                 {"swept_parameter", f.parameter},
                 {"grid", join(f.values)},
                 {"preset_keys", [&] {
                      std::string s;
                      for (const auto& k : f.keys) s += (s.empty() ? "" : ";") + k;
                      return s;
                  }()},
                 {"mc", mc ? "on" : "off"}};
    if (mc) {
        run.notes.push_back({"trials", std::to_string(spec.n_trials)});
        run.notes.push_back({"region_radius", fmt(spec.region_radius)});
    }
    run.notes.push_back({"trends_passed",
                         std::to_string(passed) + "/" + std::to_string(run.trends.size())});
    return run;
}

}  // namespace hetcran::cli
