#include "ofdma/ppp.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace ofdma {

double Point2::norm() const noexcept {
    return std::hypot(x, y);
}

double distance(const Point2& a, const Point2& b) noexcept {
    return std::hypot(a.x - b.x, a.y - b.y);
}

std::uint64_t sample_count(double lambda_total, Rng& rng) {
    if (!(lambda_total >= 0.0)) {
        throw std::invalid_argument("sample_count: intensity mass must be >= 0");
    }
    return rng.poisson(lambda_total);
}

std::vector<Point2> sample_disk(std::uint64_t count, double radius, Rng& rng) {
    if (!(radius > 0.0)) {
        throw std::invalid_argument("sample_disk: radius must be > 0");
    }
    std::vector<Point2> points;
    points.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const double r = radius * std::sqrt(rng.uniform());
        const double theta = 2.0 * std::numbers::pi * rng.uniform();
        points.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
    return points;
}

double sample_attenuation(const Shadowing& shadowing, Rng& rng) {
    return std::pow(10.0, (shadowing.mu_db + shadowing.sigma_db * rng.normal()) / 10.0);
}

PointConfiguration sample_marked_cell(const Scenario& scenario, Rng& rng, std::optional<double> region_radius) {
    if (!scenario.shadowing) {
        throw std::invalid_argument("sample_marked_cell: scenario has no shadowing parameters");
    }
    const double radius = region_radius.value_or(scenario.cell.radius);
    const double mass = std::numbers::pi * radius * radius * scenario.traffic.intensity();
    PointConfiguration config;
    config.points = sample_disk(sample_count(mass, rng), radius, rng);
    std::vector<double> marks;
    marks.reserve(config.points.size());
    for (std::size_t i = 0; i < config.points.size(); ++i) {
        marks.push_back(sample_attenuation(*scenario.shadowing, rng));
    }
    config.marks = std::move(marks);
    return config;
}

PointConfiguration sample_cell(const Scenario& scenario, Rng& rng) {
    PointConfiguration config;
    config.points = sample_disk(sample_count(scenario.mean_user_count(), rng), scenario.cell.radius, rng);
    return config;
}

void write_configuration(std::ostream& out, const PointConfiguration& config) {
    const auto precision = out.precision(17);
    for (std::size_t i = 0; i < config.points.size(); ++i) {
        out << config.points[i].x << ' ' << config.points[i].y;
        if (config.marks) {
            out << ' ' << (*config.marks)[i];
        }
        out << '\n';
    }
    out.precision(precision);
}

}  // namespace ofdma
