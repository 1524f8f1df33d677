#pragma once

#include "ofdma/model.hpp"
#include "ofdma/moments.hpp"
#include "ofdma/montecarlo.hpp"
#include "ofdma/ppp.hpp"
#include "ofdma/quadrature.hpp"

#include <iosfwd>
#include <string_view>
#include <vector>

namespace ofdma {

struct AntennaLayout {
    Point2 serving;
    std::vector<Point2> interferers;

    // Throws std::invalid_argument when two antennas coincide.
    void validate() const;
};

// How the observed antenna wins a user.
//  max_sir:       y0 serves x iff g / |x-y0|^gamma >= g_j / |x-y_j|^gamma for every j.
//  paper_literal: the distance ratio inverted, g_j <= g |x-y0|^gamma / |x-y_j|^gamma.
enum class Association { max_sir, paper_literal };

std::string_view to_string(Association association) noexcept;

struct MulticellScenario {
    Scenario base;
    AntennaLayout layout;
    double region_radius = 600.0;
    Association association = Association::max_sir;

    void validate() const;
};

// Truncation radius max(6R, reach + 4R), reach being the farthest interferer
// from the origin. High demand classes still collect mass between 3R and 5R
// under the hexagonal layout.
double default_region_radius(const Scenario& base, const AntennaLayout& layout);

// Builds a multicell scenario around `base` with the exclude outage policy and
// the default truncation radius.
MulticellScenario make_multicell(Scenario base, AntennaLayout layout,
                                 Association association = Association::max_sir);

// Serving antenna at the origin, six interferers at distance 2R on a hexagon.
AntennaLayout hex_layout(double radius);

// One antenna per line, "x y"; the first line is the serving antenna. Blank
// lines and '#' comments are skipped.
AntennaLayout read_layout(std::istream& in);
AntennaLayout load_layout(const std::string& path);
void write_layout(std::ostream& out, const AntennaLayout& layout);

// Probability over the interferers' i.i.d. gains that y0 serves a user at x
// whose gain from y0 is g (G = 1/S).
double serve_probability(const Point2& x, double g, const MulticellScenario& scenario);

struct MulticellMasses {
    ClassMasses classes;
    bool converged = true;
};

quadrature::QuadSpec multicell_default_spec();

// Class masses of users served by y0 over the truncation disk, by nested
// quadrature (space in polar coordinates, gain in the standardized normal
// variable split at the class boundaries).
MulticellMasses multicell_class_masses(const MulticellScenario& scenario,
                                       const quadrature::QuadSpec& spec = multicell_default_spec(),
                                       unsigned workers = 1);

// Expected number of users in the truncation disk that y0 wins, ignoring
// admission and demand classes.
double association_mass(const MulticellScenario& scenario,
                        const quadrature::QuadSpec& spec = multicell_default_spec());

// Demand the observed antenna carries in one snapshot.
std::uint32_t sample_multicell_total_demand(const MulticellScenario& scenario, const DemandThresholds& thresholds,
                                            Rng& rng);

std::vector<std::uint32_t> sample_multicell_totals(const MulticellScenario& scenario, std::uint64_t n_reps,
                                                   std::uint64_t seed, unsigned workers = 1);

// Throws std::invalid_argument when n_reps < 1000.
MCEstimate estimate_loss_multicell(const MulticellScenario& scenario, double n0, std::uint64_t n_reps,
                                   std::uint64_t seed, unsigned workers = 1, bool strict = true);

}  // namespace ofdma
