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

#include <iosfwd>
#include <string>
#include <vector>

#include "cli/output.hpp"
#include "hetcran/config_file.hpp"
#include "hetcran/mcsim.hpp"
#include "hetcran/model.hpp"

namespace hetcran::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

struct AnalyticRequest {
    std::string metric;
    LinkSpec link = LinkSpec::rrh_dedicated();
    Tier tier = Tier::rrh;
    double gamma = 1.0;
    double distance = 30.0;  // m
    double rate = 2.0;       // bits/s/Hz
    double secrecy_rate = 0.4;
    double sigma = 0.1;
    double x = 1.0;
};

/// Registered analytic metric names.
const std::vector<std::string>& analytic_metrics();

Table analytic_table(const LoadedConfig& cfg, const AnalyticRequest& req);

/// MC estimates for every registered simulation metric.
Table simulate_table(const LoadedConfig& cfg, const SimSpec& spec,
                     const std::string& dump_prefix = "");

struct ValidateOptions {
    SimSpec spec;
    /// Multiplies the pathloss constant seen by the analytic side only.
    double analytic_beta_scale = 1.0;
};

/// Analytic-vs-MC discrepancy table; `all_pass` is false if any row fails.
Table validate_table(const LoadedConfig& cfg, const ValidateOptions& opts, bool& all_pass);

Provenance make_provenance(const std::string& command, const LoadedConfig& cfg,
                           std::optional<std::uint64_t> seed);

/// Full command-line entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hetcran::cli
