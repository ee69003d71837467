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

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/figures.hpp"
#include "cli/output.hpp"
#include "json.hpp"

namespace hetcran::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "hetcran");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string baseline() { return std::string(HETCRAN_CONFIG_DIR) + "/baseline.cfg"; }

fs::path write_temp(const std::string& name, const std::string& body) {
    const fs::path p = fs::temp_directory_path() / ("hetcran_cli_test_" + name);
    std::ofstream(p) << body;
    return p;
}

using CsvRow = std::vector<std::string>;

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

/// Header plus data rows of a CSV body, skipping '#' provenance lines.
std::pair<CsvRow, std::vector<CsvRow>> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CsvRow header;
    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header.empty())
            header = split(line);
        else
            rows.push_back(split(line));
    }
    return {header, rows};
}

std::map<std::string, std::string> provenance(const std::string& csv) {
    std::map<std::string, std::string> out;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) != 0) continue;
        const auto eq = line.find('=');
        out[line.substr(2, eq - 2)] = line.substr(eq + 1);
    }
    return out;
}

TEST(CliAnalyticTest, AreaRateJson) {
    const auto r = invoke({"analytic", "--config", baseline(), "--metric", "area_secrecy_rate",
                           "--tier", "rrh"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_GT(j["rows"][0]["value"].get<double>(), 0.0);
    EXPECT_EQ(j["provenance"]["command"], "analytic");
}

TEST(CliAnalyticTest, RejectsInvalidPathlossExponent) {
    const auto cfg = write_temp("eta.cfg", "eta_r = 1.9\n");
    const auto r = invoke({"analytic", "--config", cfg.string(), "--metric", "area_secrecy_rate"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("eta_r"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("> 2"), std::string::npos) << r.err;
}

TEST(CliAnalyticTest, UnknownMetricListsRegistry) {
    const auto r = invoke({"analytic", "--metric", "no_such_metric"});
    EXPECT_EQ(r.code, kExitUsage);
    for (const auto& m : analytic_metrics()) EXPECT_NE(r.err.find(m), std::string::npos) << m;
}

TEST(CliAnalyticTest, MalformedInputNeverCrashes) {
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
    EXPECT_EQ(invoke({"analytic"}).code, kExitUsage);
    EXPECT_EQ(invoke({"analytic", "--metric", "user_ccdf", "--gamma", "abc"}).code, kExitUsage);
    EXPECT_EQ(invoke({"analytic", "--config", "/nonexistent.cfg", "--metric", "user_ccdf"}).code,
              kExitUsage);
    const auto bad = write_temp("bad.cfg", "n_m = (3\n");
    EXPECT_EQ(invoke({"analytic", "--config", bad.string(), "--metric", "user_ccdf"}).code,
              kExitUsage);
    EXPECT_EQ(invoke({"analytic", "--metric", "user_ccdf", "--link", "mbs-dedicated"}).code,
              kExitUsage);
    EXPECT_EQ(invoke({"reproduce", "--figure", "42"}).code, kExitUsage);
    EXPECT_EQ(invoke({"simulate", "--format", "xml"}).code, kExitUsage);
    EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(CliSimulateTest, ZeroTrialsRejected) {
    EXPECT_EQ(invoke({"simulate", "--trials", "0"}).code, kExitUsage);
}

TEST(CliSimulateTest, SameSeedByteIdentical) {
    const std::vector<std::string> args = {"simulate",        "--config", baseline(), "--trials",
                                           "1000",            "--seed",   "42",       "--format",
                                           "csv",             "--region-radius",      "5000"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto prov = provenance(a.out);
    EXPECT_EQ(prov.at("seed"), "42");
    EXPECT_EQ(prov.at("version"), "0.1.0");
    EXPECT_EQ(prov.at("config_hash").size(), 16u);
    EXPECT_EQ(prov.at("trials"), "1000");

    const auto [header, rows] = parse_csv(a.out);
    ASSERT_EQ(header, (CsvRow{"metric", "value", "stderr", "n_effective"}));
    ASSERT_FALSE(rows.empty());
    for (const auto& row : rows) {
        ASSERT_EQ(row.size(), 4u);
        EXPECT_FALSE(row[2].empty()) << row[0];
        EXPECT_GE(std::stod(row[2]), 0.0) << row[0];
    }
}

TEST(CliSimulateTest, OutputFileMatchesStdout) {
    const fs::path out = fs::temp_directory_path() / "hetcran_cli_test_sim.json";
    const std::vector<std::string> base = {"simulate", "--trials", "200", "--region-radius", "3000",
                                           "--format", "json"};
    auto to_file = base;
    to_file.insert(to_file.end(), {"--out", out.string()});
    ASSERT_EQ(invoke(to_file).code, kExitOk);
    std::ifstream in(out, std::ios::binary);
    const std::string file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(file, invoke(base).out);
    const auto j = nlohmann::json::parse(file);
    EXPECT_EQ(j["provenance"]["seed"].get<std::uint64_t>(), 1u);
    for (const auto& row : j["rows"]) EXPECT_TRUE(row["stderr"].is_number()) << row["metric"];
}

TEST(CliSimulateTest, CsvParseBackIsLossless) {
    SimSpec spec;
    spec.n_trials = 300;
    spec.region_radius = 3000.0;
    spec.workers = 1;
    const LoadedConfig cfg = load_config(baseline());
    const Table t = simulate_table(cfg, spec);
    std::ostringstream csv;
    write_table(csv, Format::csv, make_provenance("simulate", cfg, spec.seed), t);
    const auto [header, rows] = parse_csv(csv.str());
    ASSERT_EQ(header, t.columns);
    ASSERT_EQ(rows.size(), t.rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < t.columns.size(); ++k) {
            const Cell& c = t.rows[i][k];
            if (const double* d = std::get_if<double>(&c))
                EXPECT_EQ(std::strtod(rows[i][k].c_str(), nullptr), *d);
            else if (const long* l = std::get_if<long>(&c))
                EXPECT_EQ(std::stol(rows[i][k]), *l);
            else if (const std::string* s = std::get_if<std::string>(&c))
                EXPECT_EQ(rows[i][k], *s);
            else
                EXPECT_TRUE(rows[i][k].empty());
        }
}

TEST(CliOutputTest, FormatDoubleRoundTrips) {
    for (double v : {0.1, 1.0 / 3.0, 2435.3911869576314, 5.699316579881499e-4, 1e-300, -7.25})
        EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v);
}

TEST(CliValidateTest, CorruptedPathlossConstantFails) {
    const auto r = invoke({"validate", "--trials", "2000", "--region-radius", "5000",
                           "--analytic-beta-scale", "2", "--format", "csv"});
    EXPECT_EQ(r.code, kExitFailure);
    EXPECT_NE(r.err.find("FAIL"), std::string::npos);
}

TEST(CliValidateTest, HonestRunPasses) {
    const auto r = invoke({"validate", "--trials", "2000", "--region-radius", "5000",
                           "--format", "csv"});
    EXPECT_EQ(r.code, kExitOk) << r.err << r.out;
}

std::vector<double> column_for(const std::vector<CsvRow>& rows, const std::string& series,
                               const std::string& metric, std::vector<double>* sweep = nullptr) {
    std::vector<double> out;
    for (const auto& row : rows)
        if (row[2] == series && row[3] == metric && row[4] == "analytic") {
            out.push_back(std::stod(row[5]));
            if (sweep) sweep->push_back(std::stod(row[1]));
        }
    return out;
}

std::vector<std::string> series_of(const std::vector<CsvRow>& rows) {
    std::vector<std::string> out;
    for (const auto& row : rows)
        if (std::find(out.begin(), out.end(), row[2]) == out.end()) out.push_back(row[2]);
    return out;
}

TEST(CliReproduceTest, FigureNineAlphaTrends) {
    const auto r = invoke({"reproduce", "--figure", "9", "--no-mc", "--format", "csv"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto [header, rows] = parse_csv(r.out);
    ASSERT_EQ(header, (CsvRow{"swept_parameter", "sweep_value", "series", "metric", "engine",
                              "value", "stderr"}));
    for (const auto& s : series_of(rows)) {
        const auto rrh = column_for(rows, s, "area_secrecy_rate_rrh");
        const auto mbs = column_for(rows, s, "area_secrecy_rate_mbs");
        ASSERT_GE(rrh.size(), 3u);
        for (std::size_t i = 1; i < rrh.size(); ++i) {
            EXPECT_GT(rrh[i], rrh[i - 1]) << s;
            EXPECT_LT(mbs[i], mbs[i - 1]) << s;
        }
    }
}

TEST(CliReproduceTest, FigureTenLinearEnergyEfficiency) {
    const auto r = invoke({"reproduce", "--figure", "10", "--no-mc", "--format", "csv"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto rows = parse_csv(r.out).second;
    for (const auto& s : series_of(rows)) {
        std::vector<double> alpha;
        const auto ee = column_for(rows, s, "ee_rrh", &alpha);
        ASSERT_GE(ee.size(), 3u);
        EXPECT_GT(linear_r_squared(alpha, ee), 0.999) << s;
    }
}

TEST(CliReproduceTest, FigureFourMacroEfficiencyFallsWithAntennas) {
    const auto r = invoke({"reproduce", "--figure", "4", "--no-mc", "--format", "csv"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto rows = parse_csv(r.out).second;
    for (const auto& s : series_of(rows)) {
        const auto ee = column_for(rows, s, "ee_mbs");
        ASSERT_GE(ee.size(), 3u);
        for (std::size_t i = 1; i < ee.size(); ++i) EXPECT_LT(ee[i], ee[i - 1]) << s;
    }
    const auto prov = provenance(r.out);
    EXPECT_EQ(prov.at("figure"), "4");
    EXPECT_NE(prov.at("defaulted").find("p_m0"), std::string::npos);
}

TEST(CliReproduceTest, ByteIdenticalAcrossWorkers) {
    const std::vector<std::string> base = {"reproduce", "--figure", "2", "--trials", "300",
                                           "--region-radius", "3000", "--format", "csv"};
    auto one = base;
    one.insert(one.end(), {"--workers", "1"});
    auto three = base;
    three.insert(three.end(), {"--workers", "3"});
    const auto a = invoke(one);
    const auto b = invoke(three);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find(",mc,"), std::string::npos);
}

TEST(CliFigureTest, PresetsCoverEveryFigure) {
    std::vector<int> ids;
    for (const auto& f : figure_presets()) ids.push_back(f.id);
    for (int id = 2; id <= 10; ++id)
        EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
    EXPECT_NEAR(linear_r_squared({1, 2, 3, 4}, {2, 4, 6, 8}), 1.0, 1e-15);
}

}  // namespace
}  // namespace hetcran::cli
