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

#include "cli/output.hpp"

#include <cmath>
#include <cstdio>
#include "json.hpp"

#include "hetcran/errors.hpp"

namespace hetcran::cli {

Format parse_format(const std::string& text) {
    if (text == "csv") return Format::csv;
    if (text == "json") return Format::json;
    throw ConfigError("unknown format '" + text + "' (expected csv or json)");
}

void Table::add(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw DomainError("table row width mismatch");
    rows.push_back(std::move(row));
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string csv_field(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return "";
    if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
    if (const auto* n = std::get_if<long>(&c)) return std::to_string(*n);
    const auto& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

nlohmann::ordered_json json_cell(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return nullptr;
    if (const auto* d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d)) return format_double(*d);
        return *d;
    }
    if (const auto* n = std::get_if<long>(&c)) return *n;
    return std::get<std::string>(c);
}

void write_csv(std::ostream& out, const Provenance& p, const Table& t) {
    out << "# command=" << p.command << '\n';
    out << "# config_hash=" << p.config_hash << '\n';
    out << "# seed=" << (p.seed ? std::to_string(*p.seed) : std::string("none")) << '\n';
    out << "# version=" << p.version << '\n';
    out << "# defaulted=";
    for (std::size_t i = 0; i < p.defaulted.size(); ++i) out << (i ? ";" : "") << p.defaulted[i];
    out << '\n';
    for (const auto& [k, v] : p.notes) out << "# " << k << '=' << v << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << '\n';
    }
}

void write_json(std::ostream& out, const Provenance& p, const Table& t) {
    nlohmann::ordered_json prov;
    prov["command"] = p.command;
    prov["config_hash"] = p.config_hash;
    prov["seed"] = p.seed ? nlohmann::ordered_json(*p.seed) : nlohmann::ordered_json(nullptr);
    prov["version"] = p.version;
    prov["defaulted"] = p.defaulted;
    for (const auto& [k, v] : p.notes) prov[k] = v;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json r;
        for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = json_cell(row[i]);
        rows.push_back(std::move(r));
    }
    nlohmann::ordered_json doc;
    doc["provenance"] = std::move(prov);
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

}  // namespace

void write_table(std::ostream& out, Format format, const Provenance& prov, const Table& table) {
    if (format == Format::csv)
        write_csv(out, prov, table);
    else
        write_json(out, prov, table);
}

}  // namespace hetcran::cli
