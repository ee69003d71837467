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

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "hetcran/analytic.hpp"
#include "hetcran/errors.hpp"
#include "hetcran/version.hpp"

namespace hetcran::cli {

namespace {

constexpr LinkSpec kLinks[3] = {LinkSpec::rrh_dedicated(), LinkSpec::rrh_shared(),
                                LinkSpec::mbs_shared()};

Cell cell(double v) { return v; }

}  // namespace

Provenance make_provenance(const std::string& command, const LoadedConfig& cfg,
                           std::optional<std::uint64_t> seed) {
    Provenance p;
    p.command = command;
    p.config_hash = cfg.hash_hex();
    p.seed = seed;
    p.version = kVersion;
    p.defaulted = cfg.defaulted;
    return p;
}

const std::vector<std::string>& analytic_metrics() {
    static const std::vector<std::string> names = {
        "association",        "user_sinr_ccdf",     "user_capacity",
        "mbs_capacity_bound", "eve_sinr_cdf",       "eve_capacity",
        "secrecy_rate",       "area_secrecy_rate",  "connection_outage",
        "secrecy_outage",     "rate_for_outage",    "delay_tolerant",
        "energy_efficiency",
    };
    return names;
}

Table analytic_table(const LoadedConfig& cfg, const AnalyticRequest& req) {
    const auto& names = analytic_metrics();
    if (std::find(names.begin(), names.end(), req.metric) == names.end()) {
        std::string list;
        for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
        throw ConfigError("unknown metric '" + req.metric + "'; registered metrics: " + list);
    }
    const NetworkConfig& net = cfg.network;
    net.validate();
    Table t;
    t.columns = {"metric", "subject", "value"};
    const std::string link = req.link.name();
    const std::string& m = req.metric;
    if (m == "association") {
        const auto [rrh, mbs] = association_probabilities(net);
        t.add({std::string("association"), std::string("rrh"), cell(rrh)});
        t.add({std::string("association"), std::string("mbs"), cell(mbs)});
    } else if (m == "user_sinr_ccdf") {
        t.add({m, link, cell(user_sinr_ccdf(req.link, req.gamma, req.distance, net))});
    } else if (m == "user_capacity") {
        t.add({m, link, cell(user_ergodic_capacity(req.link, net))});
    } else if (m == "mbs_capacity_bound") {
        t.add({m, std::string("mbs-shared"), cell(mbs_capacity_lower_bound(net))});
    } else if (m == "eve_sinr_cdf") {
        t.add({m, link, cell(eve_sinr_cdf(req.link, req.x, net))});
    } else if (m == "eve_capacity") {
        t.add({m, link, cell(eve_ergodic_capacity(req.link, net))});
    } else if (m == "secrecy_rate") {
        const auto r = ergodic_secrecy_rate(req.link, net);
        t.add({std::string("user_capacity"), link, cell(r.user_capacity)});
        t.add({std::string("eve_capacity"), link, cell(r.eve_capacity)});
        t.add({std::string("secrecy_rate"), link, cell(r.secrecy_rate)});
    } else if (m == "area_secrecy_rate") {
        t.add({m, tier_name(req.tier), cell(area_secrecy_rate(req.tier, net))});
    } else if (m == "connection_outage") {
        t.add({m, link, cell(connection_outage(req.link, req.rate, req.distance, net))});
    } else if (m == "secrecy_outage") {
        t.add({m, link, cell(secrecy_outage(req.link, req.rate, req.secrecy_rate, net))});
    } else if (m == "rate_for_outage") {
        t.add({m, link, cell(rate_for_outage(req.link, req.sigma, req.distance, net))});
    } else if (m == "delay_tolerant") {
        const auto d = delay_tolerant_rate_rule(req.link, req.secrecy_rate, net);
        t.add({std::string("max_rate"), link, cell(d.max_rate)});
        t.add({std::string("eve_capacity"), link, cell(d.eve_capacity)});
        t.add({std::string("margin"), link, cell(d.margin)});
        t.add({std::string("outage_flag"), link, Cell(static_cast<long>(d.outage_flag))});
    } else {
        const auto e = energy_efficiency(net, cfg.power);
        t.add({std::string("ee_rrh"), std::string("rrh"), cell(e.ee_rrh)});
        t.add({std::string("ee_rrh_approx"), std::string("rrh"), cell(e.ee_rrh_approx)});
        t.add({std::string("ee_mbs"), std::string("mbs"), cell(e.ee_mbs)});
        t.add({std::string("ee_mbs_exact"), std::string("mbs"), cell(e.ee_mbs_exact)});
        t.add({std::string("ee_network"), std::string("network"), cell(e.ee_network)});
    }
    return t;
}

namespace {

void add_estimate(Table& t, const std::string& metric, const MetricEstimate& e) {
    t.add({metric, cell(e.value), cell(e.std_error), Cell(e.n_effective)});
}

}  // namespace

Table simulate_table(const LoadedConfig& cfg, const SimSpec& spec, const std::string& dump_prefix) {
    const NetworkConfig& net = cfg.network;
    SimSpec natural = spec;
    natural.serving = ServingCondition::natural;
    const auto users = run_user_trials(net, natural);
    const auto eves = run_eve_trials(net, spec);
    if (!dump_prefix.empty()) {
        std::ofstream uf(dump_prefix + "_users.csv");
        std::ofstream ef(dump_prefix + "_eves.csv");
        if (!uf || !ef) throw ConfigError("cannot write trial dumps with prefix " + dump_prefix);
        write_user_trials_csv(uf, users.outcomes);
        write_eve_trials_csv(ef, eves.outcomes);
    }
    Table t;
    t.columns = {"metric", "value", "stderr", "n_effective"};
    add_estimate(t, "association_rrh", users.association_rrh);
    add_estimate(t, "capacity_rrh-dedicated", users.capacity_rrh_dedicated);
    add_estimate(t, "capacity_rrh-shared", users.capacity_rrh_shared);
    add_estimate(t, "capacity_mbs-shared", users.capacity_mbs);
    for (const auto link : kLinks)
        add_estimate(t, "eve_capacity_" + link.name(), eves.capacity[link_index(link)]);
    for (const auto link : kLinks)
        add_estimate(t, "secrecy_rate_" + link.name(), paired_secrecy_rate_estimate(link, users, eves));
    add_estimate(t, "area_secrecy_rate_rrh", area_secrecy_rate_estimate(Tier::rrh, net, users, eves));
    add_estimate(t, "area_secrecy_rate_mbs", area_secrecy_rate_estimate(Tier::mbs, net, users, eves));
    add_estimate(t, "eve_empty_fraction",
                 estimate_proportion(eves.n_empty, static_cast<long>(eves.outcomes.size())));
    return t;
}

Table validate_table(const LoadedConfig& cfg, const ValidateOptions& opts, bool& all_pass) {
    const NetworkConfig& net = cfg.network;
    net.validate();
    if (!(opts.analytic_beta_scale > 0.0)) throw ConfigError("beta scale must be > 0");
    NetworkConfig an = net;
    // beta scales as f_c^-2.
    an.f_c = net.f_c / std::sqrt(opts.analytic_beta_scale);

    SimSpec natural = opts.spec;
    natural.serving = ServingCondition::natural;
    const auto users = run_user_trials(net, natural);
    const auto eves = run_eve_trials(net, opts.spec);

    Table t;
    t.columns = {"metric", "analytic", "mc", "stderr", "z", "check", "result"};
    all_pass = true;
    auto row = [&](const std::string& name, double analytic, const MetricEstimate& mc,
                   bool one_sided) {
        const double z = mc.std_error > 0.0 ? (analytic - mc.value) / mc.std_error
                                            : (analytic == mc.value ? 0.0 : INFINITY);
        const bool pass = one_sided ? analytic <= mc.value + 3.0 * mc.std_error : std::abs(z) < 3.0;
        all_pass = all_pass && pass;
        t.add({name, cell(analytic), cell(mc.value), cell(mc.std_error), cell(z),
               std::string(one_sided ? "bound<=mc+3se" : "|z|<3"),
               std::string(pass ? "PASS" : "FAIL")});
    };
    row("association_rrh", association_probabilities(an).first, users.association_rrh, false);
    row("capacity_rrh-dedicated", user_ergodic_capacity(LinkSpec::rrh_dedicated(), an),
        users.capacity_rrh_dedicated, false);
    row("capacity_rrh-shared", user_ergodic_capacity(LinkSpec::rrh_shared(), an),
        users.capacity_rrh_shared, false);
    row("capacity_mbs-shared_bound", mbs_capacity_lower_bound(an), users.capacity_mbs, true);
    for (const auto link : kLinks)
        row("eve_capacity_" + link.name(), eve_ergodic_capacity(link, an),
            eves.capacity[link_index(link)], false);
    row("area_secrecy_rate_rrh", area_secrecy_rate(Tier::rrh, an),
        area_secrecy_rate_estimate(Tier::rrh, net, users, eves), false);
    row("area_secrecy_rate_mbs_bound", area_secrecy_rate(Tier::mbs, an),
        area_secrecy_rate_estimate(Tier::mbs, net, users, eves), true);
    return t;
}

}  // namespace hetcran::cli
