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

#include "hetcran/config_file.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>

#include "hetcran/errors.hpp"

namespace hetcran {

namespace {

enum class Category { density, power, psd, frequency, count, plain, switch_value };

struct KeyInfo {
    const char* name;
    Category category;
    std::function<double&(LoadedConfig&)> real;
    std::function<int&(LoadedConfig&)> integer;
};

const std::vector<KeyInfo>& key_table() {
    static const std::vector<KeyInfo> table = [] {
        std::vector<KeyInfo> t;
        auto real = [&t](const char* name, Category c, double& (*f)(LoadedConfig&)) {
            t.push_back({name, c, f, nullptr});
        };
        auto integer = [&t](const char* name, int& (*f)(LoadedConfig&)) {
            t.push_back({name, Category::count, nullptr, f});
        };
        using L = LoadedConfig;
        real("lambda_m", Category::density, [](L& c) -> double& { return c.network.lambda_m; });
        real("lambda_r", Category::density, [](L& c) -> double& { return c.network.lambda_r; });
        real("lambda_e", Category::density, [](L& c) -> double& { return c.network.lambda_e; });
        real("p_m", Category::power, [](L& c) -> double& { return c.network.p_m; });
        real("p_r", Category::power, [](L& c) -> double& { return c.network.p_r; });
        integer("n_m", [](L& c) -> int& { return c.network.n_m; });
        integer("s_users", [](L& c) -> int& { return c.network.s_users; });
        real("eta_m", Category::plain, [](L& c) -> double& { return c.network.eta_m; });
        real("eta_r", Category::plain, [](L& c) -> double& { return c.network.eta_r; });
        real("f_c", Category::frequency, [](L& c) -> double& { return c.network.f_c; });
        real("b_o", Category::frequency, [](L& c) -> double& { return c.network.b_o; });
        integer("k_rb", [](L& c) -> int& { return c.network.k_rb; });
        real("alpha", Category::plain, [](L& c) -> double& { return c.network.alpha; });
        real("n0", Category::psd, [](L& c) -> double& { return c.network.n0; });
        real("n1", Category::psd, [](L& c) -> double& { return c.network.n1; });
        real("ne", Category::psd, [](L& c) -> double& { return c.network.ne; });
        t.push_back({"mbs_eve_noise", Category::switch_value, nullptr, nullptr});
        real("eps_r", Category::plain, [](L& c) -> double& { return c.power.eps_r; });
        real("eps_m", Category::plain, [](L& c) -> double& { return c.power.eps_m; });
        real("p_r0", Category::power, [](L& c) -> double& { return c.power.p_r0; });
        real("p_m0", Category::power, [](L& c) -> double& { return c.power.p_m0; });
        real("p_fh", Category::power, [](L& c) -> double& { return c.power.p_fh; });
        real("p_bh", Category::power, [](L& c) -> double& { return c.power.p_bh; });
        real("lambda_10", Category::plain, [](L& c) -> double& { return c.power.lambda_rho0[0]; });
        real("lambda_20", Category::plain, [](L& c) -> double& { return c.power.lambda_rho0[1]; });
        real("lambda_30", Category::plain, [](L& c) -> double& { return c.power.lambda_rho0[2]; });
        real("lambda_11", Category::plain, [](L& c) -> double& { return c.power.lambda_rho1[0]; });
        real("lambda_21", Category::plain, [](L& c) -> double& { return c.power.lambda_rho1[1]; });
        real("lambda_31", Category::plain, [](L& c) -> double& { return c.power.lambda_rho1[2]; });
        return t;
    }();
    return table;
}

const KeyInfo* find_key(const std::string& key) {
    for (const auto& k : key_table())
        if (key == k.name) return &k;
    return nullptr;
}

std::string trim(std::string_view s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class ExprParser {
public:
    ExprParser(std::string_view text, const std::vector<std::pair<std::string, double>>& symbols)
        : text_(text), symbols_(symbols) {}

    double parse() {
        const double v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError("expression '" + std::string(text_) + "': " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    double expr() {
        double v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    double term() {
        double v = unary();
        for (;;) {
            if (eat('*')) v *= unary();
            else if (eat('/')) v /= unary();
            else return v;
        }
    }

    double unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    double power() {
        const double base = primary();
        if (eat('^')) return std::pow(base, unary());
        return base;
    }

    double primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            const double v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const std::string rest(text_.substr(pos_));
            char* end = nullptr;
            const double v = std::strtod(rest.c_str(), &end);
            if (end == rest.c_str()) fail("bad number");
            pos_ += static_cast<size_t>(end - rest.c_str());
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t e = pos_;
            while (e < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[e])) || text_[e] == '_'))
                ++e;
            const std::string name(text_.substr(pos_, e - pos_));
            pos_ = e;
            if (name == "pi") return std::numbers::pi;
            for (const auto& [k, v] : symbols_)
                if (k == name) return v;
            fail("unknown identifier '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const std::vector<std::pair<std::string, double>>& symbols_;
    size_t pos_ = 0;
};

struct UnitRule {
    const char* suffix;
    Category category;
    std::function<double(double)> to_si;
};

const std::vector<UnitRule>& unit_rules() {
    static const std::vector<UnitRule> rules = {
        {"dBm/Hz", Category::psd, [](double v) { return dbm_to_watts(v); }},
        {"mW/Hz", Category::psd, [](double v) { return v * 1e-3; }},
        {"W/Hz", Category::psd, [](double v) { return v; }},
        {"m^-2", Category::density, [](double v) { return v; }},
        {"isd", Category::density,
         [](double v) { return 1.0 / (std::numbers::pi * v * v); }},
        {"dBm", Category::power, [](double v) { return dbm_to_watts(v); }},
        {"mW", Category::power, [](double v) { return v * 1e-3; }},
        {"W", Category::power, [](double v) { return v; }},
        {"GHz", Category::frequency, [](double v) { return v * 1e9; }},
        {"MHz", Category::frequency, [](double v) { return v * 1e6; }},
        {"kHz", Category::frequency, [](double v) { return v * 1e3; }},
        {"Hz", Category::frequency, [](double v) { return v; }},
    };
    return rules;
}

bool ends_with_unit(const std::string& value, const std::string& suffix) {
    if (value.size() <= suffix.size()) return false;
    if (value.compare(value.size() - suffix.size(), suffix.size(), suffix) != 0) return false;
    const char before = value[value.size() - suffix.size() - 1];
    return std::isspace(static_cast<unsigned char>(before)) != 0;
}

}  // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> out;
        for (const auto& k : key_table()) out.emplace_back(k.name);
        return out;
    }();
    return keys;
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

double evaluate_expression(std::string_view expr,
                           const std::vector<std::pair<std::string, double>>& symbols) {
    ExprParser p(expr, symbols);
    const double v = p.parse();
    if (!std::isfinite(v)) throw ConfigError("expression '" + std::string(expr) + "' is not finite");
    return v;
}

void assign_config_value(LoadedConfig& cfg, const std::string& key, double value) {
    const KeyInfo* info = find_key(key);
    if (info == nullptr) throw ConfigError("unknown key '" + key + "'");
    if (info->category == Category::switch_value) {
        if (value == 0.0) cfg.network.mbs_eve_noise = EveNoiseSource::ne;
        else if (value == 1.0) cfg.network.mbs_eve_noise = EveNoiseSource::n1;
        else throw ConfigError("mbs_eve_noise must be ne or n1");
        return;
    }
    if (info->integer) {
        if (std::floor(value) != value || std::abs(value) > 1e9)
            throw ConfigError(key + " must be an integer");
        info->integer(cfg) = static_cast<int>(value);
        return;
    }
    info->real(cfg) = value;
}

double config_value(const LoadedConfig& cfg, const std::string& key) {
    const KeyInfo* info = find_key(key);
    if (info == nullptr) throw ConfigError("unknown key '" + key + "'");
    auto& mut = const_cast<LoadedConfig&>(cfg);
    if (info->category == Category::switch_value)
        return cfg.network.mbs_eve_noise == EveNoiseSource::ne ? 0.0 : 1.0;
    if (info->integer) return info->integer(mut);
    return info->real(mut);
}

std::string LoadedConfig::canonical_text() const {
    std::string out;
    for (const auto& k : key_table()) {
        out += k.name;
        out += " = ";
        if (k.category == Category::switch_value)
            out += network.mbs_eve_noise == EveNoiseSource::ne ? "ne" : "n1";
        else
            out += format_g17(config_value(*this, k.name));
        out += '\n';
    }
    return out;
}

std::uint64_t LoadedConfig::hash() const { return fnv1a64(canonical_text()); }

std::string LoadedConfig::hash_hex() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
    return buf;
}

LoadedConfig default_config() {
    LoadedConfig cfg;
    cfg.defaulted = config_keys();
    return cfg;
}

LoadedConfig parse_config(std::string_view text, std::string_view source) {
    LoadedConfig cfg;
    std::set<std::string> seen;
    std::vector<std::pair<std::string, double>> symbols;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto where = [&] { return std::string(source) + ":" + std::to_string(lineno) + ": "; };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) throw ConfigError(where() + "expected 'key = value'");
        const std::string key = trim(std::string_view(stripped).substr(0, eq));
        std::string value = trim(std::string_view(stripped).substr(eq + 1));
        const KeyInfo* info = find_key(key);
        if (info == nullptr) {
            std::string known;
            for (const auto& k : config_keys()) known += (known.empty() ? "" : ", ") + k;
            throw ConfigError(where() + "unknown key '" + key + "' (known keys: " + known + ")");
        }
        if (!seen.insert(key).second) throw ConfigError(where() + "duplicate key '" + key + "'");
        if (value.empty()) throw ConfigError(where() + "missing value for '" + key + "'");

        if (info->category == Category::switch_value) {
            if (value == "ne") cfg.network.mbs_eve_noise = EveNoiseSource::ne;
            else if (value == "n1") cfg.network.mbs_eve_noise = EveNoiseSource::n1;
            else throw ConfigError(where() + "mbs_eve_noise must be ne or n1");
            continue;
        }

        const UnitRule* unit = nullptr;
        for (const auto& rule : unit_rules()) {
            if (ends_with_unit(value, rule.suffix)) {
                unit = &rule;
                break;
            }
        }
        if (unit != nullptr) {
            if (unit->category != info->category)
                throw ConfigError(where() + "unit '" + unit->suffix + "' does not apply to '" + key +
                                  "'");
            value = trim(std::string_view(value).substr(0, value.size() - std::strlen(unit->suffix)));
        }
        double v = 0.0;
        try {
            v = evaluate_expression(value, symbols);
        } catch (const ConfigError& e) {
            throw ConfigError(where() + e.what());
        }
        if (unit != nullptr) v = unit->to_si(v);
        try {
            assign_config_value(cfg, key, v);
        } catch (const ConfigError& e) {
            throw ConfigError(where() + e.what());
        }
        symbols.emplace_back(key, config_value(cfg, key));
    }
    for (const auto& k : config_keys())
        if (!seen.count(k)) cfg.defaulted.push_back(k);
    try {
        cfg.network.validate();
        cfg.power.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(std::string(source) + ": " + e.what());
    }
    return cfg;
}

LoadedConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.string());
}

}  // namespace hetcran
