#pragma once

#include "ofdma/config.hpp"
#include "ofdma/exactloss.hpp"
#include "ofdma/moments.hpp"
#include "ofdma/report.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ofdma {

// Bad invocation (missing seed, missing layout, ...): exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommandOptions {
    std::vector<double> alphas;
    std::uint64_t reps = 0;
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
    bool both_associations = false;
    std::optional<OutagePolicy> outage_policy;
    std::optional<std::string> layout_path;
};

// alpha = 1.5, 1.6, ..., 2.0
std::vector<double> default_alpha_grid();

// Thresholds, class masses and moments of a single-cell scenario.
struct CellAnalysis {
    DemandThresholds thresholds;
    ClassMasses classes;
    MomentPair moments;
};

CellAnalysis analyze_cell(const Scenario& scenario);

// Published reference values the bundled configs are meant to reproduce.
namespace published {
inline constexpr std::array<double, 6> kAlphaGrid = {1.5, 1.6, 1.7, 1.8, 1.9, 2.0};
inline constexpr std::array<double, 6> kDeterministicBound = {0.18, 0.1, 0.04, 0.02, 0.008, 0.003};
inline constexpr std::array<double, 6> kDeterministicDelta = {0.98, 0.1, 1.15, 1.3, 1.3, 1.4};
inline constexpr std::array<double, 6> kShadowedBound = {0.2, 0.1, 0.05, 0.02, 0.01, 0.004};
inline constexpr std::array<double, 6> kShadowedDelta = {1.7, 1.8, 2.1, 2.3, 2.4, 2.6};
inline constexpr double kMulticellMean = 21.60;
inline constexpr double kMulticellSecondMoment = 26.81;
}  // namespace published

RunReport cmd_bound(const Config& config, const CommandOptions& options);
RunReport cmd_exact(const Config& config, const CommandOptions& options);
RunReport cmd_simulate(const Config& config, const CommandOptions& options);
RunReport cmd_multicell(const Config& config, const CommandOptions& options);

// Full reproduction from a directory holding paper_sec3.conf, paper_sec4.conf
// and paper_sec5.conf. Writes tables.md and tables.csv into out_dir when it is
// non-empty.
RunReport cmd_tables(const std::string& config_dir, const std::string& out_dir, const CommandOptions& options);

// Per-run Monte Carlo records: alpha,n0,p_hat,ci_low,ci_high,n_reps,seed.
void write_mc_records(std::ostream& out, const RunReport& report);

}  // namespace ofdma
