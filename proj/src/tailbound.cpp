#include "ofdma/tailbound.hpp"

#include "ofdma/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace ofdma {

double concentration_tail(const BoundInput& input) {
    if (!(input.t >= 0.0)) throw std::invalid_argument("concentration_tail: t must be >= 0");
    if (!(input.v > 0.0)) throw std::invalid_argument("concentration_tail: v must be > 0");
    if (!(input.s > 0.0)) throw std::invalid_argument("concentration_tail: s must be > 0");
    if (!(input.m >= 0.0)) throw std::invalid_argument("concentration_tail: m must be >= 0");
    const double ratio = input.v / (input.s * input.s);
    return std::exp(-ratio * specfun::g_func(input.t * input.s / input.v));
}

double p_sup(double alpha, const MomentPair& moments, int n_max) {
    if (!(alpha >= 1.0)) throw std::invalid_argument("p_sup: alpha must be >= 1");
    if (n_max < 1) throw std::invalid_argument("p_sup: n_max must be >= 1");
    return concentration_tail(BoundInput{moments.m, moments.v, static_cast<double>(n_max),
                                         (alpha - 1.0) * moments.m});
}

double invert_p_sup(double target, const MomentPair& moments, int n_max) {
    if (!(target > 0.0 && target < 1.0)) {
        throw std::invalid_argument("invert_p_sup: target must lie in (0, 1)");
    }
    if (p_sup(1.0, moments, n_max) <= target) {
        return 1.0;
    }
    double lo = 1.0;
    double hi = 2.0;
    while (p_sup(hi, moments, n_max) > target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) throw std::runtime_error("invert_p_sup: target not reachable");
    }
    // Invariant: p_sup(lo) > target >= p_sup(hi).
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (p_sup(mid, moments, n_max) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

}  // namespace ofdma
