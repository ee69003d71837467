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

#include <string>
#include <vector>

#include "cli/output.hpp"
#include "hetcran/config_file.hpp"
#include "hetcran/mcsim.hpp"

namespace hetcran::cli {

struct TrendCheck {
    std::string description;
    bool passed = false;
};

struct FigureRun {
    Table table;  // swept_parameter, sweep_value, series, metric, engine, value, stderr
    std::vector<TrendCheck> trends;
    std::vector<std::pair<std::string, std::string>> notes;
};

struct FigureInfo {
    int id;
    std::string title;
    long default_trials;  // 0 when the preset has no MC markers
};

const std::vector<FigureInfo>& figure_presets();

/// Runs preset `figure` on top of `base`. MC rows are produced only when
/// `with_mc` is set and the preset has MC markers.
FigureRun reproduce_figure(int figure, const LoadedConfig& base, const SimSpec& spec, bool with_mc);

/// Coefficient of determination of a least-squares line through (x, y).
double linear_r_squared(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hetcran::cli
