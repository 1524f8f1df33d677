#pragma once

#include "ofdma/moments.hpp"

namespace ofdma {

// Inputs of the Poisson concentration inequality for F = sum f(X_i):
// mean m, quadratic characteristic v = int |D_x F|^2 dLambda, a uniform bound
// s on the add-one-point increment, and the deviation t.
struct BoundInput {
    double m = 0.0;
    double v = 1.0;
    double s = 1.0;
    double t = 0.0;
};

// Upper bound on P(F - m >= t): exp(-(v / s^2) g(t s / v)).
double concentration_tail(const BoundInput& input);

// Bound on P(total demand >= alpha m_N), using s = n_max and t = (alpha - 1) m_N.
double p_sup(double alpha, const MomentPair& moments, int n_max);

// Smallest alpha >= 1 with p_sup(alpha) <= target, to 1e-9 in alpha.
double invert_p_sup(double target, const MomentPair& moments, int n_max);

}  // namespace ofdma
