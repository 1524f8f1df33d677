#pragma once

#include "ofdma/model.hpp"
#include "ofdma/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace ofdma {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    double norm() const noexcept;
};

double distance(const Point2& a, const Point2& b) noexcept;

// A finite realisation of a (possibly marked) point process. marks, when
// present, holds one shadowing attenuation per point.
struct PointConfiguration {
    std::vector<Point2> points;
    std::optional<std::vector<double>> marks;

    std::size_t size() const noexcept { return points.size(); }
};

std::uint64_t sample_count(double lambda_total, Rng& rng);

// count i.i.d. uniform points on the origin-centred disk (r = R sqrt(U), theta = 2 pi V).
std::vector<Point2> sample_disk(std::uint64_t count, double radius, Rng& rng);

// S = 10^(Z/10), Z ~ Normal(mu_db, sigma_db^2).
double sample_attenuation(const Shadowing& shadowing, Rng& rng);

// Equilibrium snapshot of the active users over a disk of the given radius
// (the cell radius when omitted), marked with i.i.d. attenuations.
PointConfiguration sample_marked_cell(const Scenario& scenario, Rng& rng,
                                      std::optional<double> region_radius = std::nullopt);

// Unmarked snapshot on the cell disk.
PointConfiguration sample_cell(const Scenario& scenario, Rng& rng);

// One point per line, "x y s" (s omitted for unmarked configurations).
void write_configuration(std::ostream& out, const PointConfiguration& config);

}  // namespace ofdma
