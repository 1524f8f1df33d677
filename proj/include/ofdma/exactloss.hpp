#pragma once

#include "ofdma/moments.hpp"

#include <vector>

namespace ofdma {

// Law of total demand sum_j j K_j with independent K_j ~ Poisson(lambda_j),
// truncated to 0..d_max.
struct DemandDistribution {
    std::vector<double> pmf;
    double tail_mass = 0.0;

    std::size_t d_max() const noexcept { return pmf.empty() ? 0 : pmf.size() - 1; }
    double mean() const noexcept;
    double variance() const noexcept;
    // P(total > n0) when strict, P(total >= n0) otherwise; tail_mass counts as exceeding.
    double exceedance(double n0, bool strict) const noexcept;
};

// Throws std::invalid_argument when d_max < 1, and std::domain_error when
// more than half the mass falls beyond d_max.
DemandDistribution demand_distribution(const ClassMasses& classes, std::size_t d_max);

// Exact overload probability; d_max grows until tail_mass < 1e-12.
double exact_loss(const ClassMasses& classes, double n0, bool strict = true);

// The distribution used by exact_loss (tail_mass < 1e-12).
DemandDistribution converged_demand_distribution(const ClassMasses& classes);

}  // namespace ofdma
