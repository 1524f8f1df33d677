#include "ofdma/config.hpp"

#include "ofdma/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>

namespace ofdma {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& key, const std::string& text) {
    try {
        if (const auto slash = text.find('/'); slash != std::string::npos) {
            const double num = parse_double(trim(text.substr(0, slash)));
            const double den = parse_double(trim(text.substr(slash + 1)));
            if (den == 0.0) throw std::invalid_argument("zero denominator");
            return num / den;
        }
        return parse_double(text);
    } catch (const std::invalid_argument&) {
        throw ConfigError("config key '" + key + "': not a number: \"" + text + "\"");
    }
}

}  // namespace

Mode parse_mode(const std::string& text) {
    if (text == "deterministic") return Mode::deterministic;
    if (text == "shadowed") return Mode::shadowed;
    if (text == "multicell") return Mode::multicell;
    throw ConfigError("unknown mode \"" + text + "\" (deterministic | shadowed | multicell)");
}

OutagePolicy parse_outage_policy(const std::string& text) {
    if (text == "exclude") return OutagePolicy::exclude;
    if (text == "clamp_to_nmax") return OutagePolicy::clamp_to_nmax;
    throw ConfigError("unknown outage_policy \"" + text + "\" (exclude | clamp_to_nmax)");
}

Association parse_association(const std::string& text) {
    if (text == "max_sir") return Association::max_sir;
    if (text == "paper_literal") return Association::paper_literal;
    throw ConfigError("unknown association \"" + text + "\" (max_sir | paper_literal)");
}

Config parse_config(std::istream& in, const std::string& source) {
    std::map<std::string, std::string> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(source + ":" + std::to_string(line_no) + ": expected \"key = value\"");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError(source + ":" + std::to_string(line_no) + ": empty key or value");
        }
        if (!values.emplace(key, value).second) {
            throw ConfigError(source + ":" + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
    }

    Config config;
    config.source = source;
    Scenario& s = config.scenario;
    const auto take = [&](const std::string& key) -> std::optional<std::string> {
        const auto it = values.find(key);
        if (it == values.end()) return std::nullopt;
        std::string v = it->second;
        values.erase(it);
        return v;
    };
    const auto number = [&](const std::string& key) -> std::optional<double> {
        if (auto text = take(key)) return parse_number(key, *text);
        return std::nullopt;
    };
    const auto required = [&](const std::string& key) {
        if (auto v = number(key)) return *v;
        throw ConfigError(source + ": missing required key '" + key + "'");
    };

    s.mode = parse_mode(take("mode").value_or("deterministic"));
    s.radio.gamma = required("gamma");
    s.radio.c0 = required("c0");
    s.radio.w = required("w");
    s.radio.p_ratio = required("p_ratio");
    s.radio.mean_gain = number("mean_gain").value_or(1.0);
    s.radio.beta_min = number("beta_min").value_or(0.0);
    s.traffic.rho = required("rho");
    s.traffic.nu = required("nu");
    s.cell.radius = required("radius");
    const std::optional<double> mu = number("mu_db");
    const std::optional<double> sigma = number("sigma_db");
    if (mu.has_value() != sigma.has_value()) {
        throw ConfigError(source + ": mu_db and sigma_db must be given together");
    }
    if (mu) s.shadowing = Shadowing{*mu, *sigma};

    const std::string unit = take("time_unit").value_or("s");
    if (unit == "min") {
        s.traffic.rho /= 60.0;
        s.traffic.nu /= 60.0;
    } else if (unit != "s") {
        throw ConfigError(source + ": time_unit must be 's' or 'min'");
    }

    const auto policy = take("outage_policy");
    s.outage_policy = policy ? parse_outage_policy(*policy)
                             : (s.mode == Mode::multicell ? OutagePolicy::exclude : OutagePolicy::clamp_to_nmax);
    config.region_radius = number("region_radius");
    if (auto a = take("association")) config.association = parse_association(*a);
    if (auto layout = take("layout")) {
        std::filesystem::path p(*layout);
        if (p.is_relative() && source != "<stream>") {
            p = std::filesystem::path(source).parent_path() / p;
        }
        config.layout_path = p.string();
    }

    if (!values.empty()) {
        throw ConfigError(source + ": unknown key '" + values.begin()->first + "'");
    }
    try {
        s.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(source + ": " + e.what());
    }
    return config;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return parse_config(in, path);
}

std::vector<std::pair<std::string, std::string>> scenario_echo(const Scenario& s) {
    std::vector<std::pair<std::string, std::string>> out = {
        {"mode", std::string(to_string(s.mode))},
        {"gamma", format_exact(s.radio.gamma)},
        {"c0", format_exact(s.radio.c0)},
        {"w", format_exact(s.radio.w)},
        {"p_ratio", format_exact(s.radio.p_ratio)},
        {"mean_gain", format_exact(s.radio.mean_gain)},
        {"beta_min", format_exact(s.radio.beta_min)},
        {"rho", format_exact(s.traffic.rho)},
        {"nu", format_exact(s.traffic.nu)},
        {"radius", format_exact(s.cell.radius)},
    };
    if (s.shadowing) {
        out.emplace_back("mu_db", format_exact(s.shadowing->mu_db));
        out.emplace_back("sigma_db", format_exact(s.shadowing->sigma_db));
    }
    out.emplace_back("outage_policy", std::string(to_string(s.outage_policy)));
    return out;
}

}  // namespace ofdma
