#include "ofdma/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ofdma::specfun {

double normal_cdf(double x) noexcept {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double log_normal_cdf(double x) noexcept {
    if (x > -30.0) {
        return std::log(normal_cdf(x));
    }
    // Mills-ratio asymptotic series for the far lower tail.
    const double x2 = x * x;
    const double series = 1.0 - 1.0 / x2 + 3.0 / (x2 * x2) - 15.0 / (x2 * x2 * x2);
    return -0.5 * x2 - std::log(-x) - 0.5 * std::log(2.0 * std::numbers::pi) + std::log(series);
}

double normal_pdf(double x) noexcept {
    return std::exp(-0.5 * x * x) * (std::numbers::inv_sqrtpi / std::numbers::sqrt2);
}

double g_func(double t) {
    if (!(t >= 0.0)) {
        throw std::domain_error("g_func: argument must be nonnegative");
    }
    if (t < 0.1) {
        // g(t) = sum_{k>=2} (-1)^k t^k / (k (k-1))
        double term = t * t;
        double sum = 0.0;
        for (int k = 2; k < 60; ++k) {
            const double contribution = term / (k * (k - 1.0));
            sum += (k % 2 == 0) ? contribution : -contribution;
            if (contribution < 1e-18 * sum) {
                break;
            }
            term *= t;
        }
        return sum;
    }
    return (1.0 + t) * std::log1p(t) - t;
}

double lognormal_attenuation_pdf(double y, double mu_db, double sigma_db) {
    if (!(y > 0.0)) {
        throw std::domain_error("lognormal_attenuation_pdf: y must be positive");
    }
    if (!(sigma_db > 0.0)) {
        throw std::domain_error("lognormal_attenuation_pdf: sigma must be positive");
    }
    const double z = (10.0 * std::log10(y) - mu_db) / sigma_db;
    return kDbPerNeper / (sigma_db * y) * normal_pdf(z);
}

double lognormal_attenuation_cdf(double y, double mu_db, double sigma_db) {
    if (!(y > 0.0)) {
        throw std::domain_error("lognormal_attenuation_cdf: y must be positive");
    }
    if (!(sigma_db > 0.0)) {
        throw std::domain_error("lognormal_attenuation_cdf: sigma must be positive");
    }
    return normal_cdf((10.0 * std::log10(y) - mu_db) / sigma_db);
}

}  // namespace ofdma::specfun
