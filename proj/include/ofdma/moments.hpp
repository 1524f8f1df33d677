#pragma once

#include "ofdma/model.hpp"
#include "ofdma/quadrature.hpp"

#include <vector>

namespace ofdma {

// First and second Campbell moments of total demand: m = int N dLambda,
// v = int N^2 dLambda.
struct MomentPair {
    double m = 0.0;
    double v = 0.0;
};

// Expected user count per demand class. lambdas[j - 1] is the mass of class j.
struct ClassMasses {
    std::vector<double> lambdas;

    int n_max() const noexcept { return static_cast<int>(lambdas.size()); }
    double total() const noexcept;
    double operator()(int j) const { return lambdas.at(static_cast<std::size_t>(j - 1)); }
};

ClassMasses class_masses_deterministic(const Scenario& scenario, const DemandThresholds& thresholds);

// Area-like mass of the set {s |x|^gamma <= p_ratio / beta} over the cell disk,
// weighted by the shadowing law, in closed form. Valid for any beta > 0.
double shadowed_area(double beta, const Scenario& scenario);

// A_j for 1 <= j <= n_max - 1 (A_0 = 0). Throws std::out_of_range otherwise.
double a_j_closed(int j, const Scenario& scenario);

// Same quantity by adaptive radial quadrature of 2 pi r Phi(alpha_j - zeta ln r).
double a_j_quadrature(int j, const Scenario& scenario, double tol = 1e-11);

ClassMasses class_masses_shadowed(const Scenario& scenario);

// Dispatches on scenario.mode (deterministic or shadowed).
ClassMasses class_masses(const Scenario& scenario);

MomentPair moments_from_classes(const ClassMasses& classes);

}  // namespace ofdma
