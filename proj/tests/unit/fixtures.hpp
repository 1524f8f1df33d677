#pragma once

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

// Reads "name = value" lines from tests/fixtures/regression_anchors.txt.
inline std::map<std::string, double> load_anchors() {
    std::ifstream in(std::string(OFDMA_FIXTURE_DIR) + "/regression_anchors.txt");
    if (!in) throw std::runtime_error("missing regression_anchors.txt");
    std::map<std::string, double> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        key.erase(key.find_last_not_of(' ') + 1);
        out[key] = std::stod(line.substr(eq + 1));
    }
    return out;
}
