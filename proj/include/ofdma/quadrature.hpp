#pragma once

#include <functional>
#include <span>

namespace ofdma::quadrature {

struct QuadSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;

    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
    // false when the subdivision cap was hit before the tolerance was met.
    bool converged = true;
};

using Function1D = std::function<double(double)>;

// Globally adaptive Gauss-Kronrod (7, 15) integration over [a, b].
QuadResult integrate_1d(const Function1D& f, double a, double b, const QuadSpec& spec = {});

// Same, with known interior breakpoints (kinks or jumps) seeding the panels.
// Breakpoints outside (a, b) are ignored.
QuadResult integrate_1d(const Function1D& f, double a, double b, std::span<const double> breakpoints,
                        const QuadSpec& spec = {});

// Half-width of the standard-normal window used for gain integrals.
inline constexpr double kNormalWindow = 8.0;

// E[h(S)] for S = 10^(Z/10), Z ~ Normal(mu_db, sigma_db^2), evaluated in the
// standardized variable z over [-8, 8]. Breakpoints are attenuation values
// where h jumps.
QuadResult integrate_gain_marginal(const Function1D& h, double mu_db, double sigma_db,
                                   std::span<const double> attenuation_breakpoints = {},
                                   const QuadSpec& spec = {});

// Integral over the disk of the given radius centred at the origin of
// f(r, theta) r dr dtheta. Adaptive in r, periodic trapezoid in theta with the
// panel count doubled until successive values agree to spec.rel_tol.
QuadResult integrate_polar_disk(const std::function<double(double, double)>& f, double radius,
                                const QuadSpec& spec = {});

// Periodic trapezoid rule on [0, 2 pi) with panel doubling; exposed for reuse.
QuadResult integrate_angle(const Function1D& f, const QuadSpec& spec = {});

}  // namespace ofdma::quadrature
