#include "ofdma/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ofdma {

namespace {

constexpr double kMaxDemand = 1e6;

// ceil() that treats values within 1e-12 relative of an integer as that
// integer, so thresholds computed through exp/log land in the right class.
double tolerant_ceil(double x) {
    return std::ceil(x * (1.0 - 1e-12));
}

}  // namespace

std::string_view to_string(Mode mode) noexcept {
    switch (mode) {
        case Mode::deterministic: return "deterministic";
        case Mode::shadowed: return "shadowed";
        case Mode::multicell: return "multicell";
    }
    return "unknown";
}

std::string_view to_string(OutagePolicy policy) noexcept {
    switch (policy) {
        case OutagePolicy::exclude: return "exclude";
        case OutagePolicy::clamp_to_nmax: return "clamp_to_nmax";
    }
    return "unknown";
}

void RadioParams::validate() const {
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
    if (!(c0 > 0.0)) throw std::invalid_argument("c0 must be > 0");
    if (!(w > 0.0)) throw std::invalid_argument("w must be > 0");
    if (!(p_ratio > 0.0)) throw std::invalid_argument("p_ratio must be > 0");
    if (!(mean_gain > 0.0)) throw std::invalid_argument("mean_gain must be > 0");
    if (!(beta_min >= 0.0)) throw std::invalid_argument("beta_min must be >= 0");
}

void TrafficParams::validate() const {
    if (!(rho > 0.0)) throw std::invalid_argument("rho must be > 0");
    if (!(nu > 0.0)) throw std::invalid_argument("nu must be > 0");
}

void Scenario::validate() const {
    radio.validate();
    traffic.validate();
    if (!(cell.radius > 0.0)) throw std::invalid_argument("radius must be > 0");
    if (mode != Mode::deterministic) {
        if (!shadowing) {
            throw std::invalid_argument("shadowed and multicell modes require mu_db and sigma_db");
        }
        if (!(shadowing->sigma_db > 0.0)) throw std::invalid_argument("sigma_db must be > 0");
        if (!std::isfinite(shadowing->mu_db)) throw std::invalid_argument("mu_db must be finite");
        if (!(radio.beta_min > 0.0)) {
            throw std::invalid_argument("shadowed and multicell modes require beta_min > 0");
        }
    }
}

double Scenario::mean_user_count() const noexcept {
    return std::numbers::pi * cell.radius * cell.radius * traffic.intensity();
}

std::optional<int> DemandThresholds::shadowed_class(double load) const noexcept {
    if (load > admission_limit) {
        return std::nullopt;
    }
    for (int j = 1; j < n_max; ++j) {
        if (load <= tilde_betas[static_cast<std::size_t>(j)]) {
            return j;
        }
    }
    return n_max;
}

int demand_deterministic(double r, const RadioParams& radio) {
    if (r <= 0.0) {
        return 1;
    }
    const double sir = radio.p_ratio * radio.mean_gain / std::pow(r, radio.gamma);
    const double raw = std::ceil(radio.bits_per_hz() / std::log2(1.0 + sir));
    if (!(raw < kMaxDemand * 10.0)) {
        return std::numeric_limits<int>::max();
    }
    return std::max(1, static_cast<int>(raw));
}

double class_sir_threshold(int j, const RadioParams& radio) {
    if (j < 1) {
        return std::numeric_limits<double>::infinity();
    }
    return std::exp2(radio.bits_per_hz() / j) - 1.0;
}

int n_max_from_beta_min(const RadioParams& radio) {
    if (!(radio.beta_min > 0.0)) {
        throw std::invalid_argument("n_max_from_beta_min: beta_min must be > 0");
    }
    const double raw = tolerant_ceil(radio.bits_per_hz() / std::log2(1.0 + radio.beta_min));
    if (!(raw <= kMaxDemand)) {
        throw std::invalid_argument("n_max_from_beta_min: beta_min too small, demand exceeds 1e6");
    }
    return std::max(1, static_cast<int>(raw));
}

std::optional<int> demand_shadowed(double r, double s, const RadioParams& radio) {
    if (r < 0.0) throw std::invalid_argument("demand_shadowed: r must be >= 0");
    if (!(s > 0.0)) throw std::invalid_argument("demand_shadowed: s must be > 0");
    Scenario scenario;
    scenario.radio = radio;
    scenario.mode = Mode::shadowed;
    scenario.shadowing = Shadowing{};
    const DemandThresholds thresholds = compute_thresholds(scenario);
    return thresholds.shadowed_class(s * std::pow(r, radio.gamma));
}

DemandThresholds compute_thresholds(const Scenario& scenario) {
    const RadioParams& radio = scenario.radio;
    radio.validate();
    DemandThresholds out;

    if (scenario.mode == Mode::deterministic) {
        const double cell_radius = scenario.cell.radius;
        if (demand_deterministic(cell_radius, radio) > kMaxDemand) {
            throw std::invalid_argument("compute_thresholds: demand at the cell edge exceeds 1e6 subcarriers");
        }
        out.radii.push_back(0.0);
        const double reach = radio.p_ratio * radio.mean_gain;
        for (int j = 1;; ++j) {
            const double r_j = std::pow(reach / class_sir_threshold(j, radio), 1.0 / radio.gamma);
            if (r_j >= cell_radius) {
                out.radii.push_back(cell_radius);
                out.n_max = j;
                break;
            }
            out.radii.push_back(r_j);
        }
    } else {
        out.n_max = n_max_from_beta_min(radio);
    }

    out.betas.assign(static_cast<std::size_t>(out.n_max), 0.0);
    out.tilde_betas.assign(static_cast<std::size_t>(out.n_max), 0.0);
    out.betas[0] = std::numeric_limits<double>::infinity();
    for (int j = 1; j < out.n_max; ++j) {
        const auto idx = static_cast<std::size_t>(j);
        out.betas[idx] = class_sir_threshold(j, radio);
        out.tilde_betas[idx] = radio.p_ratio / out.betas[idx];
    }
    out.admission_limit = radio.beta_min > 0.0 ? radio.p_ratio / radio.beta_min
                                                : std::numeric_limits<double>::infinity();
    return out;
}

Scenario deterministic_reference_scenario() {
    Scenario s;
    s.radio = RadioParams{2.8, 2e5, 2.5e5, 1e6, 1.0 / 12.0, 0.2};
    s.traffic = TrafficParams{1e-5, 1.0 / 60.0};
    s.cell = CellGeometry{100.0};
    s.shadowing = Shadowing{6.0, std::sqrt(10.0)};
    s.mode = Mode::deterministic;
    return s;
}

Scenario shadowed_reference_scenario() {
    Scenario s = deterministic_reference_scenario();
    s.mode = Mode::shadowed;
    return s;
}

}  // namespace ofdma
