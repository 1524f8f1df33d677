// Command-line front end: subcarrier overload bounds, exact loss, simulation
// and multicell moments for OFDMA downlink cells.

#include "ofdma/commands.hpp"
#include "ofdma/config.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

enum ExitCode : int { kOk = 0, kConfigError = 2, kAccuracyWarning = 3 };

struct Cli {
    std::string config_path;
    std::string layout_path;
    std::vector<double> alphas;
    std::uint64_t reps = 0;
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
    bool strict = false;
    bool both_associations = false;
    std::string outage_policy;
    std::string csv_path;
    std::string markdown_path;
    std::string config_dir = "configs";
    std::string out_dir = "report";
};

ofdma::CommandOptions to_options(const Cli& cli) {
    ofdma::CommandOptions options;
    options.alphas = cli.alphas;
    options.reps = cli.reps;
    options.seed = cli.seed;
    options.workers = cli.workers;
    options.both_associations = cli.both_associations;
    if (!cli.outage_policy.empty()) options.outage_policy = ofdma::parse_outage_policy(cli.outage_policy);
    if (!cli.layout_path.empty()) options.layout_path = cli.layout_path;
    return options;
}

int emit(const ofdma::RunReport& report, const Cli& cli) {
    ofdma::write_markdown(std::cout, report);
    if (!cli.csv_path.empty()) {
        std::ofstream csv(cli.csv_path);
        if (report.command == "simulate") {
            ofdma::write_mc_records(csv, report);
        } else {
            ofdma::write_csv(csv, report.rows);
        }
    }
    if (!cli.markdown_path.empty()) {
        std::ofstream md(cli.markdown_path);
        ofdma::write_markdown(md, report);
    }
    for (const std::string& note : report.notes) {
        if (note.find("unreliable") != std::string::npos || note.find("inaccurate") != std::string::npos) {
            std::cerr << "warning: " << note << '\n';
        }
    }
    if (report.accuracy_warning && cli.strict) {
        std::cerr << "error: numerical accuracy warning escalated by --strict\n";
        return kAccuracyWarning;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subcarrier overload bounds for OFDMA cells with Poisson users"};
    app.require_subcommand(1);
    Cli cli;

    const auto common = [&](CLI::App* sub, bool needs_config) {
        auto* opt = sub->add_option("--config", cli.config_path, "Scenario file (key = value)");
        if (needs_config) opt->required()->check(CLI::ExistingFile);
        sub->add_option("--alpha", cli.alphas, "Load factors alpha (N0 = alpha m_N); default 1.5..2.0")
            ->delimiter(',');
        sub->add_option("--workers", cli.workers, "Worker threads (never changes results)")
            ->check(CLI::Range(1u, 1024u));
        sub->add_flag("--strict", cli.strict, "Exit 3 on numerical accuracy warnings");
        sub->add_option("--outage-policy", cli.outage_policy, "exclude | clamp_to_nmax")
            ->check(CLI::IsMember({"exclude", "clamp_to_nmax"}));
        sub->add_option("--csv", cli.csv_path, "Write CSV records to this path");
        sub->add_option("--markdown", cli.markdown_path, "Write the markdown report to this path");
    };

    auto* bound = app.add_subcommand("bound", "Concentration bound P_sup per alpha");
    common(bound, true);
    auto* exact = app.add_subcommand("exact", "Exact compound-Poisson loss and Delta per alpha");
    common(exact, true);
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo loss estimate with 99% Wilson interval");
    common(simulate, true);
    simulate->add_option("--reps", cli.reps, "Replications")->required();
    simulate->add_option("--seed", cli.seed, "Seed (required)")->required();
    auto* multicell = app.add_subcommand("multicell", "Multi-antenna best-server moments and bound");
    common(multicell, true);
    multicell->add_option("--layout", cli.layout_path, "Antenna layout file (x y per line, serving first)");
    multicell->add_option("--reps", cli.reps, "Optional Monte Carlo validation replications");
    multicell->add_option("--seed", cli.seed, "Seed for the Monte Carlo validation");
    multicell->add_flag("--both-associations", cli.both_associations, "Report max_sir and paper_literal");
    auto* tables = app.add_subcommand("tables", "Reproduce the reference tables into a report directory");
    common(tables, false);
    tables->add_option("--config-dir", cli.config_dir, "Directory with the bundled configs")
        ->check(CLI::ExistingDirectory);
    tables->add_option("--out", cli.out_dir, "Output directory for tables.md and tables.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        const ofdma::CommandOptions options = to_options(cli);
        if (*tables) {
            return emit(ofdma::cmd_tables(cli.config_dir, cli.out_dir, options), cli);
        }
        const ofdma::Config config = ofdma::load_config(cli.config_path);
        if (*bound) return emit(ofdma::cmd_bound(config, options), cli);
        if (*exact) return emit(ofdma::cmd_exact(config, options), cli);
        if (*simulate) return emit(ofdma::cmd_simulate(config, options), cli);
        if (*multicell) return emit(ofdma::cmd_multicell(config, options), cli);
    } catch (const ofdma::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const ofdma::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kOk;
}
