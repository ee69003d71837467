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
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hetcran::cli {

enum class Format { csv, json };

Format parse_format(const std::string& text);

/// Identifies the inputs that produced an output file.
struct Provenance {
    std::string command;
    std::string config_hash;
    std::optional<std::uint64_t> seed;
    std::string version;
    std::vector<std::string> defaulted;
    /// Extra key/value records, e.g. sweep grids.
    std::vector<std::pair<std::string, std::string>> notes;
};

using Cell = std::variant<std::monostate, double, long, std::string>;

/// Column-oriented result table. Null cells are written as empty CSV
/// fields and JSON nulls.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);
};

/// Doubles are written with 17 significant digits so that parsing the
/// output back reproduces every value exactly.
std::string format_double(double v);

void write_table(std::ostream& out, Format format, const Provenance& prov, const Table& table);

}  // namespace hetcran::cli
