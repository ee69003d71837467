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

#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/figures.hpp"
#include "hetcran/errors.hpp"

namespace hetcran::cli {

namespace {

struct CommonFlags {
    std::string config;
    std::string out;
    std::string format;
};

struct SimFlags {
    long trials = 10000;
    std::uint64_t seed = 1;
    double region_radius = SimSpec{}.region_radius;
    int workers = 0;
    bool antithetic = false;
};

void add_common(CLI::App* cmd, CommonFlags& f, const std::string& default_format) {
    f.format = default_format;
    cmd->add_option("--config", f.config, "Config file (defaults apply when omitted)");
    cmd->add_option("--out", f.out, "Output file (stdout when omitted)");
    cmd->add_option("--format", f.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

CLI::Option* add_sim(CLI::App* cmd, SimFlags& f) {
    auto* trials = cmd->add_option("--trials", f.trials, "Monte-Carlo trials")->capture_default_str();
    cmd->add_option("--seed", f.seed, "64-bit seed")->capture_default_str();
    cmd->add_option("--region-radius", f.region_radius, "Simulation disk radius in meters")
        ->capture_default_str();
    cmd->add_option("--workers", f.workers, "Worker threads (0: HETCRAN_WORKERS or all cores)");
    return trials;
}

SimSpec to_spec(const SimFlags& f) {
    SimSpec s;
    s.n_trials = f.trials;
    s.seed = f.seed;
    s.region_radius = f.region_radius;
    s.workers = f.workers;
    s.antithetic = f.antithetic;
    s.validate();
    return s;
}

LoadedConfig load(const CommonFlags& f) {
    return f.config.empty() ? default_config() : load_config(f.config);
}

void emit(const CommonFlags& f, std::ostream& out, const Provenance& prov, const Table& t) {
    const Format format = parse_format(f.format);
    if (f.out.empty()) {
        write_table(out, format, prov, t);
        return;
    }
    std::ofstream file(f.out, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file " + f.out);
    write_table(file, format, prov, t);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Secrecy and energy-efficiency analysis of two-tier heterogeneous C-RAN"};
    app.require_subcommand(1);

    CommonFlags analytic_common;
    AnalyticRequest req;
    std::string link = "rrh-dedicated";
    std::string tier = "rrh";
    auto* analytic = app.add_subcommand("analytic", "Evaluate one analytic metric");
    add_common(analytic, analytic_common, "json");
    analytic->add_option("--metric", req.metric, "Metric name")->required();
    analytic->add_option("--link", link, "rrh-dedicated | rrh-shared | mbs-shared")
        ->capture_default_str();
    analytic->add_option("--tier", tier, "rrh | mbs")->capture_default_str();
    analytic->add_option("--gamma", req.gamma, "SINR threshold")->capture_default_str();
    analytic->add_option("--distance", req.distance, "Serving distance in meters")
        ->capture_default_str();
    analytic->add_option("--rate", req.rate, "Rate in bits/s/Hz")->capture_default_str();
    analytic->add_option("--secrecy-rate", req.secrecy_rate, "Secrecy rate in bits/s/Hz")
        ->capture_default_str();
    analytic->add_option("--sigma", req.sigma, "Connection outage target")->capture_default_str();
    analytic->add_option("--x", req.x, "Eavesdropper SINR threshold")->capture_default_str();

    CommonFlags sim_common;
    SimFlags sim;
    std::string dump_prefix;
    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo estimates of every metric");
    add_common(simulate, sim_common, "csv");
    add_sim(simulate, sim);
    simulate->add_flag("--antithetic", sim.antithetic, "Antithetic serving-link fading");
    simulate->add_option("--dump-trials", dump_prefix, "Write PREFIX_users.csv and PREFIX_eves.csv");

    CommonFlags val_common;
    SimFlags val;
    double beta_scale = 1.0;
    auto* validate = app.add_subcommand("validate", "Analytic-vs-MC discrepancy table");
    add_common(validate, val_common, "csv");
    add_sim(validate, val);
    validate->add_option("--analytic-beta-scale", beta_scale)->group("");

    CommonFlags rep_common;
    SimFlags rep;
    int figure = 0;
    bool no_mc = false;
    auto* reproduce = app.add_subcommand("reproduce", "Run a figure preset sweep");
    add_common(reproduce, rep_common, "csv");
    reproduce->add_option("--figure", figure, "Figure preset 1..10")->required();
    auto* rep_trials = add_sim(reproduce, rep);
    reproduce->add_flag("--no-mc", no_mc, "Skip Monte-Carlo markers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analytic) {
            req.link = parse_link(link);
            req.tier = parse_tier(tier);
            const LoadedConfig cfg = load(analytic_common);
            const Table t = analytic_table(cfg, req);
            emit(analytic_common, out, make_provenance("analytic", cfg, std::nullopt), t);
            return kExitOk;
        }
        if (*simulate) {
            const SimSpec spec = to_spec(sim);
            const LoadedConfig cfg = load(sim_common);
            const Table t = simulate_table(cfg, spec, dump_prefix);
            auto prov = make_provenance("simulate", cfg, spec.seed);
            prov.notes = {{"trials", std::to_string(spec.n_trials)},
                          {"region_radius", format_double(spec.region_radius)},
                          {"antithetic", spec.antithetic ? "on" : "off"}};
            emit(sim_common, out, prov, t);
            return kExitOk;
        }
        if (*validate) {
            ValidateOptions opts;
            opts.spec = to_spec(val);
            opts.analytic_beta_scale = beta_scale;
            const LoadedConfig cfg = load(val_common);
            bool pass = false;
            const Table t = validate_table(cfg, opts, pass);
            auto prov = make_provenance("validate", cfg, opts.spec.seed);
            prov.notes = {{"trials", std::to_string(opts.spec.n_trials)},
                          {"region_radius", format_double(opts.spec.region_radius)}};
            emit(val_common, out, prov, t);
            if (!pass) {
                for (const auto& row : t.rows)
                    if (std::get<std::string>(row.back()) == "FAIL")
                        err << "FAIL " << std::get<std::string>(row.front()) << '\n';
                return kExitFailure;
            }
            return kExitOk;
        }
        const LoadedConfig cfg = load(rep_common);
        if (rep_trials->count() == 0) {
            for (const auto& info : figure_presets())
                if (info.id == figure && info.default_trials > 0) rep.trials = info.default_trials;
        }
        const SimSpec spec = to_spec(rep);
        const FigureRun run = reproduce_figure(figure, cfg, spec, !no_mc);
        auto prov = make_provenance("reproduce", cfg, spec.seed);
        prov.notes = run.notes;
        emit(rep_common, out, prov, run.table);
        bool pass = true;
        for (const auto& t : run.trends) {
            err << (t.passed ? "PASS " : "FAIL ") << t.description << '\n';
            pass = pass && t.passed;
        }
        return pass ? kExitOk : kExitFailure;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace hetcran::cli
