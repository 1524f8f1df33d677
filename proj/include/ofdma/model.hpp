#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace ofdma {

enum class Mode { deterministic, shadowed, multicell };

// What happens to a user whose SIR falls below beta_min.
enum class OutagePolicy { exclude, clamp_to_nmax };

std::string_view to_string(Mode mode) noexcept;
std::string_view to_string(OutagePolicy policy) noexcept;

struct RadioParams {
    double gamma = 2.8;       // path-loss exponent
    double c0 = 2e5;          // required capacity per user, bit/s
    double w = 2.5e5;         // subcarrier bandwidth, Hz
    double p_ratio = 1e6;     // P_t K / I, dimensionless
    double mean_gain = 1.0;   // deterministic mean gain
    double beta_min = 0.0;    // minimum admissible SIR

    void validate() const;
    // C0 / W, the spectral efficiency a single subcarrier has to carry.
    double bits_per_hz() const noexcept { return c0 / w; }
};

struct TrafficParams {
    double rho = 1e-5;  // arrival surface density, s^-1 m^-2
    double nu = 1.0;    // service rate, s^-1

    void validate() const;
    // Equilibrium spatial intensity of active users, m^-2.
    double intensity() const noexcept { return rho / nu; }
};

struct CellGeometry {
    double radius = 100.0;  // m, antenna at the origin
};

struct Shadowing {
    double mu_db = 0.0;
    double sigma_db = 1.0;
};

struct Scenario {
    RadioParams radio;
    TrafficParams traffic;
    CellGeometry cell;
    std::optional<Shadowing> shadowing;
    Mode mode = Mode::deterministic;
    OutagePolicy outage_policy = OutagePolicy::clamp_to_nmax;

    void validate() const;
    // Expected number of active users in the cell disk.
    double mean_user_count() const noexcept;
};

struct DemandThresholds {
    int n_max = 1;
    // betas[0] = +inf; betas[j] = 2^(C0/(W j)) - 1 for j = 1..n_max-1.
    std::vector<double> betas;
    // tilde_betas[j] = p_ratio / betas[j]; tilde_betas[0] = 0.
    std::vector<double> tilde_betas;
    // Deterministic mode only: radii[0] = 0, radii[j] = min(R_j, R), radii[n_max] = R.
    std::vector<double> radii;
    // s * r^gamma above this means SIR < beta_min (infinite when beta_min = 0).
    double admission_limit = 0.0;

    // Demand class of a user with attenuation-distance product s * r^gamma, or
    // nullopt when the user is in radio outage.
    std::optional<int> shadowed_class(double load) const noexcept;
};

int demand_deterministic(double r, const RadioParams& radio);

// nullopt marks radio outage (SIR < beta_min).
std::optional<int> demand_shadowed(double r, double s, const RadioParams& radio);

int n_max_from_beta_min(const RadioParams& radio);

// Shannon threshold SIR for class j: 2^(C0/(W j)) - 1.
double class_sir_threshold(int j, const RadioParams& radio);

DemandThresholds compute_thresholds(const Scenario& scenario);

// Reference cell used by the bundled configs: gamma 2.8, C0 200 kb/s,
// W 250 kHz, P_tK/I 1e6, 18.85 mean users on R = 100 m (SI units).
Scenario deterministic_reference_scenario();
Scenario shadowed_reference_scenario();

}  // namespace ofdma
