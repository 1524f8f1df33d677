#include "ofdma/commands.hpp"
#include "ofdma/config.hpp"
#include "ofdma/multicell.hpp"
#include "ofdma/report.hpp"
#include "ofdma/tailbound.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

using namespace ofdma;

namespace {

Config parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in, "test.conf");
}

const std::string kShadowed =
    "mode = shadowed\ngamma = 2.8\nc0 = 2e5\nw = 2.5e5\np_ratio = 1e6\nbeta_min = 0.2\n"
    "rho = 1e-5\nnu = 1/60\nradius = 100\nmu_db = 6\nsigma_db = 3.1622776601683795\n";

std::string config_dir() { return std::string(OFDMA_FIXTURE_DIR) + "/../../configs"; }

}  // namespace

TEST_CASE("config parsing") {
    const Config c = parse(kShadowed + "# trailing comment\n");
    CHECK(c.scenario.mode == Mode::shadowed);
    CHECK(c.scenario.traffic.nu == 1.0 / 60.0);
    CHECK(c.scenario.outage_policy == OutagePolicy::clamp_to_nmax);
    CHECK(c.scenario.shadowing->mu_db == 6.0);
    CHECK_FALSE(c.layout_path.has_value());

    const Config minutes = parse("mode = deterministic\ngamma = 2.8\nc0 = 2e5\nw = 2.5e5\np_ratio = 1e6\n"
                                 "mean_gain = 1/12\nbeta_min = 0.2\ntime_unit = min\nrho = 0.0006\nnu = 1\n"
                                 "radius = 100\n");
    const Scenario ref = deterministic_reference_scenario();
    CHECK(minutes.scenario.traffic.rho == doctest::Approx(ref.traffic.rho).epsilon(1e-15));
    CHECK(minutes.scenario.traffic.nu == doctest::Approx(ref.traffic.nu).epsilon(1e-15));
    CHECK(minutes.scenario.radio.mean_gain == 1.0 / 12.0);

    const Config file = load_config(config_dir() + "/paper_sec5.conf");
    CHECK(file.scenario.mode == Mode::multicell);
    CHECK(file.scenario.outage_policy == OutagePolicy::exclude);
    REQUIRE(file.layout_path.has_value());
    CHECK(std::filesystem::exists(*file.layout_path));
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse(kShadowed + "gamma = 3\n"), ConfigError);
    CHECK_THROWS_AS(parse(kShadowed + "colour = red\n"), ConfigError);
    CHECK_THROWS_AS(parse(kShadowed + "this line has no equals sign\n"), ConfigError);
    CHECK_THROWS_AS(parse("mode = shadowed\ngamma = 2.8\n"), ConfigError);
    CHECK_THROWS_AS(parse("mode = sideways\n"), ConfigError);
    CHECK_THROWS_AS(parse(kShadowed + "time_unit = hours\n"), ConfigError);
    CHECK_THROWS_AS(parse(kShadowed + "outage_policy = ignore\n"), ConfigError);
    std::string bad = kShadowed;
    bad.replace(bad.find("radius = 100"), 12, "radius = abc");
    CHECK_THROWS_AS(parse(bad), ConfigError);
    std::string no_sigma = kShadowed;
    no_sigma.erase(no_sigma.find("sigma_db"));
    CHECK_THROWS_AS(parse(no_sigma), ConfigError);
    std::string negative = kShadowed;
    negative.replace(negative.find("gamma = 2.8"), 11, "gamma = -1");
    CHECK_THROWS_AS(parse(negative), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/x.conf"), ConfigError);
}

TEST_CASE("CSV round trip is bit-exact") {
    std::vector<ReportRow> rows(3);
    rows[0] = {"shadowed", 1.5, 35.27592295, 0.1 + 0.2, 1.0 / 3.0, std::nextafter(0.5, 1.0), std::nullopt,
               std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::log10(3.0)};
    rows[1] = {"max_sir", 2.0, 1e-310, std::nullopt, 4.9e-324, 0.0, 0.123456789012345678, 0.1, 0.2,
               std::uint64_t{100000}, std::uint64_t{42}, std::nullopt};
    rows[2].variant = "deterministic";
    rows[2].p_sup = std::numeric_limits<double>::max();
    std::stringstream io;
    write_csv(io, rows);
    CHECK(io.str().rfind(std::string(kReportCsvHeader) + "\n", 0) == 0);
    CHECK(read_csv(io) == rows);
    for (double x : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-8}) CHECK(parse_double(format_exact(x)) == x);
    std::istringstream broken(std::string(kReportCsvHeader) + "\nshadowed,1.5\n");
    CHECK_THROWS(read_csv(broken));
}

TEST_CASE("bound command") {
    Config c = parse(kShadowed);
    CommandOptions o;
    o.alphas = default_alpha_grid();
    const RunReport r = cmd_bound(c, o);
    REQUIRE(r.rows.size() == 6);
    const CellAnalysis a = analyze_cell(c.scenario);
    for (const ReportRow& row : r.rows) {
        CHECK(row.n0 == doctest::Approx(row.alpha * a.moments.m));
        CHECK(*row.p_sup == p_sup(row.alpha, a.moments, a.thresholds.n_max));
        CHECK_FALSE(row.p_exact.has_value());
    }
    CHECK(r.rows[0].alpha == 1.5);
    CHECK(r.rows[5].alpha == 2.0);
    std::ostringstream md;
    write_markdown(md, r);
    CHECK(md.str().find("1.5") != std::string::npos);
}

TEST_CASE("exact command") {
    const Config c = parse(kShadowed);
    CommandOptions o;
    o.alphas = {1.0, 1.5, 2.0};
    const RunReport r = cmd_exact(c, o);
    for (const ReportRow& row : r.rows) {
        REQUIRE(row.delta.has_value());
        CHECK(*row.delta > 0.0);
        CHECK(*row.delta == doctest::Approx(std::log10(*row.p_sup / *row.p_exact)).epsilon(1e-12));
        CHECK(*row.p_exact_ge >= *row.p_exact);
    }
    ReportRow zero;
    zero.p_sup = 0.5;
    zero.p_exact = 0.0;
    compute_delta(zero);
    CHECK_FALSE(zero.delta.has_value());

    const ClassMasses masses = class_masses(c.scenario);
    CHECK(exact_loss(masses, 0.0) == doctest::Approx(1.0 - std::exp(-18.85)).epsilon(1e-6));
}

TEST_CASE("simulate command") {
    const Config c = parse(kShadowed);
    CommandOptions o;
    o.alphas = {1.5};
    o.reps = 2000;
    CHECK_THROWS_AS(cmd_simulate(c, o), UsageError);
    o.seed = 42;
    const RunReport r = cmd_simulate(c, o);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].n_reps == std::uint64_t{2000});
    CHECK(r.rows[0].seed == std::uint64_t{42});
    CHECK(*r.rows[0].ci_low <= *r.rows[0].p_hat);
    CHECK(*r.rows[0].p_hat <= *r.rows[0].ci_high);
    o.workers = 3;
    CHECK(cmd_simulate(c, o).rows == r.rows);
    o.reps = 999;
    CHECK_THROWS_AS(cmd_simulate(c, o), UsageError);
    std::ostringstream out;
    write_mc_records(out, r);
    CHECK(out.str().rfind("alpha,n0,p_hat,ci_low,ci_high,n_reps,seed\n", 0) == 0);
}

TEST_CASE("multicell command") {
    Config c = parse(kShadowed);
    c.scenario.mode = Mode::multicell;
    c.scenario.outage_policy = OutagePolicy::clamp_to_nmax;
    CommandOptions o;
    o.alphas = {1.5};
    CHECK_THROWS_AS(cmd_multicell(c, o), UsageError);
    o.layout_path = "/nonexistent/hex.layout";
    CHECK_THROWS_AS(cmd_multicell(c, o), UsageError);

    // Single antenna with the truncation disk equal to the cell: the bound path.
    const std::filesystem::path lone = std::filesystem::temp_directory_path() / "ofdma_lone.layout";
    std::ofstream(lone) << "0 0\n";
    o.layout_path = lone.string();
    c.region_radius = c.scenario.cell.radius;
    const RunReport r = cmd_multicell(c, o);
    Config single = c;
    single.scenario.mode = Mode::shadowed;
    const RunReport b = cmd_exact(single, o);
    REQUIRE(r.rows.size() == 1);
    CHECK(*r.rows[0].p_sup == doctest::Approx(*b.rows[0].p_sup).epsilon(1e-6));
    CHECK(*r.rows[0].p_exact == doctest::Approx(*b.rows[0].p_exact).epsilon(1e-5));
    std::filesystem::remove(lone);
}
