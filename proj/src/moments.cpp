#include "ofdma/moments.hpp"

#include "ofdma/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ofdma {

namespace {

using specfun::normal_cdf;

struct LogNormalRadial {
    double alpha;
    double zeta;
};

// alpha(beta) = (10 log10(p_ratio / beta) - mu) / sigma, zeta = 10 gamma / (sigma ln 10).
LogNormalRadial radial_parameters(double beta, const Scenario& scenario) {
    if (!scenario.shadowing) {
        throw std::invalid_argument("shadowing parameters required");
    }
    const auto [mu, sigma] = *scenario.shadowing;
    const double alpha = (10.0 * std::log10(scenario.radio.p_ratio / beta) - mu) / sigma;
    const double zeta = 10.0 * scenario.radio.gamma / (sigma * specfun::kLn10);
    return {alpha, zeta};
}

void require_class_index(int j, const DemandThresholds& thresholds) {
    if (j < 1 || j > thresholds.n_max - 1) {
        throw std::out_of_range("A_j: class index outside 1..n_max-1");
    }
}

}  // namespace

double ClassMasses::total() const noexcept {
    double sum = 0.0;
    for (double l : lambdas) sum += l;
    return sum;
}

ClassMasses class_masses_deterministic(const Scenario& scenario, const DemandThresholds& thresholds) {
    if (thresholds.radii.size() != static_cast<std::size_t>(thresholds.n_max) + 1) {
        throw std::invalid_argument("class_masses_deterministic: thresholds lack radii");
    }
    const double scale = std::numbers::pi * scenario.traffic.intensity();
    ClassMasses out;
    out.lambdas.resize(static_cast<std::size_t>(thresholds.n_max));
    for (std::size_t j = 1; j < thresholds.radii.size(); ++j) {
        const double outer = thresholds.radii[j];
        const double inner = thresholds.radii[j - 1];
        out.lambdas[j - 1] = scale * (outer * outer - inner * inner);
    }
    return out;
}

double shadowed_area(double beta, const Scenario& scenario) {
    const double radius = scenario.cell.radius;
    const auto [alpha, zeta] = radial_parameters(beta, scenario);
    const double log_r = std::log(radius);
    const double disk = std::numbers::pi * radius * radius;
    const double inner = disk * normal_cdf(alpha - zeta * log_r);
    // pi exp(2/zeta^2 + 2 alpha/zeta) Phi(zeta ln R - 2/zeta - alpha), in log space.
    const double log_outer = 2.0 / (zeta * zeta) + 2.0 * alpha / zeta +
                             specfun::log_normal_cdf(zeta * log_r - 2.0 / zeta - alpha);
    return inner + std::numbers::pi * std::exp(log_outer);
}

double a_j_closed(int j, const Scenario& scenario) {
    const DemandThresholds thresholds = compute_thresholds(scenario);
    require_class_index(j, thresholds);
    return shadowed_area(thresholds.betas[static_cast<std::size_t>(j)], scenario);
}

double a_j_quadrature(int j, const Scenario& scenario, double tol) {
    const DemandThresholds thresholds = compute_thresholds(scenario);
    require_class_index(j, thresholds);
    const auto [alpha, zeta] = radial_parameters(thresholds.betas[static_cast<std::size_t>(j)], scenario);
    const double radius = scenario.cell.radius;
    const double disk = std::numbers::pi * radius * radius;
    quadrature::QuadSpec spec;
    spec.abs_tol = tol * disk;
    spec.rel_tol = tol;
    const auto integrand = [&](double r) {
        return 2.0 * std::numbers::pi * r * normal_cdf(alpha - zeta * std::log(r));
    };
    // The integrand is a smoothed step around r* = exp(alpha / zeta); seed a
    // breakpoint there so the transition is resolved from the first pass.
    const double transition = std::exp(alpha / zeta);
    const double breaks[] = {transition};
    return quadrature::integrate_1d(integrand, 0.0, radius, breaks, spec).value;
}

ClassMasses class_masses_shadowed(const Scenario& scenario) {
    scenario.validate();
    const DemandThresholds thresholds = compute_thresholds(scenario);
    const double intensity = scenario.traffic.intensity();
    const double radius = scenario.cell.radius;
    const double disk = std::numbers::pi * radius * radius;

    ClassMasses out;
    out.lambdas.resize(static_cast<std::size_t>(thresholds.n_max));
    double previous = 0.0;
    for (int j = 1; j < thresholds.n_max; ++j) {
        const double a_j = shadowed_area(thresholds.betas[static_cast<std::size_t>(j)], scenario);
        out.lambdas[static_cast<std::size_t>(j - 1)] = intensity * (a_j - previous);
        previous = a_j;
    }
    const double last_edge = scenario.outage_policy == OutagePolicy::clamp_to_nmax
                                 ? disk
                                 : shadowed_area(scenario.radio.beta_min, scenario);
    out.lambdas.back() = intensity * (last_edge - previous);
    return out;
}

ClassMasses class_masses(const Scenario& scenario) {
    switch (scenario.mode) {
        case Mode::deterministic:
            return class_masses_deterministic(scenario, compute_thresholds(scenario));
        case Mode::shadowed:
            return class_masses_shadowed(scenario);
        case Mode::multicell:
            break;
    }
    throw std::invalid_argument("class_masses: multicell scenarios go through multicell_class_masses");
}

MomentPair moments_from_classes(const ClassMasses& classes) {
    MomentPair out;
    for (int j = 1; j <= classes.n_max(); ++j) {
        const double lambda = classes(j);
        out.m += j * lambda;
        out.v += static_cast<double>(j) * j * lambda;
    }
    return out;
}

}  // namespace ofdma
