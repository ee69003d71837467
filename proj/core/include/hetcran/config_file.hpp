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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hetcran/model.hpp"

namespace hetcran {

/// Configuration loaded from a flat `key = expression [unit]` file.
///
/// Lines hold one assignment each; `#` starts a comment. Expressions
/// support + - * / ^, parentheses, `pi`, scientific notation and the SI
/// values of keys assigned on earlier lines. Units:
///
///   densities        m^-2 | isd    (x isd means 1 / (pi x^2))
///   transmit powers  W | mW | dBm
///   noise PSDs       W/Hz | mW/Hz | dBm/Hz
///   frequencies      Hz | kHz | MHz | GHz
///
/// A value without a unit is taken in SI. Unknown or repeated keys are
/// rejected. Keys that are absent keep their default and are listed in
/// `defaulted`.
struct LoadedConfig {
    NetworkConfig network;
    PowerModel power;
    std::vector<std::string> defaulted;

    /// One `key = value` line per key in fixed order, values as %.17g.
    std::string canonical_text() const;
    /// FNV-1a 64 of canonical_text().
    std::uint64_t hash() const;
    std::string hash_hex() const;
};

/// Every recognised key in canonical order.
const std::vector<std::string>& config_keys();

LoadedConfig parse_config(std::string_view text, std::string_view source = "<config>");
LoadedConfig load_config(const std::filesystem::path& path);
/// All fields at their defaults, all keys listed as defaulted.
LoadedConfig default_config();

/// Assigns one key from an SI value. mbs_eve_noise takes 0 (ne) or 1 (n1).
/// Throws ConfigError on unknown keys or non-integral counts.
void assign_config_value(LoadedConfig& cfg, const std::string& key, double value);

/// Reads one key as an SI value.
double config_value(const LoadedConfig& cfg, const std::string& key);

/// Evaluates an arithmetic expression; identifiers resolve through `symbols`.
double evaluate_expression(std::string_view expr,
                           const std::vector<std::pair<std::string, double>>& symbols);

std::uint64_t fnv1a64(std::string_view text);

}  // namespace hetcran
