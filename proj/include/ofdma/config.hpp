#pragma once

#include "ofdma/model.hpp"
#include "ofdma/multicell.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ofdma {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parsed scenario file. Format: one "key = value" per line, '#' starts a
// comment. Keys: mode, gamma, c0, w, p_ratio, mean_gain, beta_min, rho, nu,
// radius, mu_db, sigma_db, outage_policy, time_unit (s | min), and for
// multicell runs region_radius, association, layout. Numbers may be written as
// a fraction "a/b".
struct Config {
    Scenario scenario;
    std::optional<double> region_radius;
    std::optional<Association> association;
    // Relative paths are resolved against the config file's directory.
    std::optional<std::string> layout_path;
    std::string source;
};

Config parse_config(std::istream& in, const std::string& source = "<stream>");
Config load_config(const std::string& path);

// "key = value" lines reproducing the scenario (SI units).
std::vector<std::pair<std::string, std::string>> scenario_echo(const Scenario& scenario);

Mode parse_mode(const std::string& text);
OutagePolicy parse_outage_policy(const std::string& text);
Association parse_association(const std::string& text);

}  // namespace ofdma
