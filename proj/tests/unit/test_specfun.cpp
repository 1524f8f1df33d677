#include "ofdma/quadrature.hpp"
#include "ofdma/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace ofdma::specfun;

namespace {

// Maclaurin series of erf, 30 terms, in long double.
long double erf_series(long double x) {
    long double sum = 0.0L;
    long double power = x;
    long double factorial = 1.0L;
    for (int n = 0; n < 30; ++n) {
        if (n > 0) factorial *= n;
        const long double term = power / (factorial * (2 * n + 1));
        sum += (n % 2 == 0) ? term : -term;
        power *= x * x;
    }
    return 2.0L / std::sqrt(std::numbers::pi_v<long double>) * sum;
}

// g(t) by its alternating series in long double.
long double g_series(long double t) {
    long double sum = 0.0L;
    long double power = t * t;
    for (int k = 2; k < 200; ++k) {
        const long double term = power / (k * (k - 1.0L));
        sum += (k % 2 == 0) ? term : -term;
        power *= t;
        if (term < 1e-30L) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("normal_cdf reference values") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-16));
    CHECK(std::abs(normal_cdf(40.0) - 1.0) <= 1e-15);
    const long double x = 1.959963985L;
    const double oracle = static_cast<double>(0.5L * (1.0L + erf_series(x / std::sqrt(2.0L))));
    CHECK(std::abs(normal_cdf(1.959963985) - oracle) <= 1e-12);
    CHECK(std::abs(normal_cdf(1.959963985) - 0.975) <= 1e-9);
}

TEST_CASE("normal_cdf symmetry and monotonicity") {
    double previous = 0.0;
    for (double x = -8.0; x <= 8.0; x += 0.01) {
        CHECK(std::abs(normal_cdf(x) + normal_cdf(-x) - 1.0) <= 1e-14);
        CHECK(normal_cdf(x) >= previous);
        previous = normal_cdf(x);
    }
}

TEST_CASE("log_normal_cdf matches log of the CDF and stays finite in the far tail") {
    for (double x : {-25.0, -5.0, 0.0, 3.0}) {
        CHECK(log_normal_cdf(x) == doctest::Approx(std::log(normal_cdf(x))).epsilon(1e-12));
    }
    // Continuity across the switch to the asymptotic branch.
    CHECK(log_normal_cdf(-30.0000001) == doctest::Approx(log_normal_cdf(-29.9999999)).epsilon(1e-6));
    CHECK(std::isfinite(log_normal_cdf(-100.0)));
}

TEST_CASE("g_func values and accuracy") {
    CHECK(g_func(0.0) == 0.0);
    CHECK(g_func(1.0) == doctest::Approx(2.0 * std::log(2.0) - 1.0).epsilon(1e-15));
    CHECK(g_func(1e-8) == doctest::Approx(5e-17).epsilon(0.01));
    for (double t : {1e-12, 1e-9, 1e-6, 1e-3, 0.05, 0.0999, 0.1, 0.5}) {
        const double oracle = static_cast<double>(g_series(t));
        CHECK(std::abs(g_func(t) - oracle) <= 1e-12 * oracle);
    }
    for (double t : {1.0, 10.0, 1e3, 1e6}) {
        const long double tl = t;
        const double oracle = static_cast<double>((1.0L + tl) * std::log1p(tl) - tl);
        CHECK(std::abs(g_func(t) - oracle) <= 1e-12 * oracle);
    }
    CHECK_THROWS_AS(g_func(-1e-3), std::domain_error);
}

TEST_CASE("g_func is convex and nonnegative on a grid") {
    const double h = 1e-3;
    for (double t = h; t < 20.0; t += 0.01) {
        CHECK(g_func(t) >= 0.0);
        CHECK(g_func(t + h) - 2.0 * g_func(t) + g_func(t - h) >= -1e-10);
    }
}

TEST_CASE("lognormal attenuation density") {
    const double mu = 6.0;
    const double sigma = std::sqrt(10.0);
    const double xi = 10.0 / std::log(10.0);
    const double median = std::pow(10.0, mu / 10.0);
    CHECK(lognormal_attenuation_pdf(median, mu, sigma) ==
          doctest::Approx(xi / (std::sqrt(2.0 * std::numbers::pi) * sigma * median)).epsilon(1e-14));
    // y = 1: exponent is -mu^2 / (2 sigma^2) = -36/20.
    CHECK(lognormal_attenuation_pdf(1.0, mu, sigma) ==
          doctest::Approx(xi / (std::sqrt(2.0 * std::numbers::pi) * sigma) * std::exp(-1.8)).epsilon(1e-14));
    CHECK_THROWS_AS(lognormal_attenuation_pdf(0.0, mu, sigma), std::domain_error);
    CHECK_THROWS_AS(lognormal_attenuation_pdf(-1.0, mu, sigma), std::domain_error);
}

TEST_CASE("lognormal density integrates to one") {
    const double mu = 6.0;
    const double sigma = std::sqrt(10.0);
    // Integrate in u = ln y so the integrand is a smooth bump.
    const auto in_log = [&](double u) {
        const double y = std::exp(u);
        return lognormal_attenuation_pdf(y, mu, sigma) * y;
    };
    const double centre = mu / 10.0 * std::log(10.0);
    const double width = 8.0 * sigma * std::log(10.0) / 10.0;
    const auto result = ofdma::quadrature::integrate_1d(in_log, centre - width, centre + width);
    CHECK(std::abs(result.value - 1.0) <= 1e-8);
}

TEST_CASE("lognormal CDF limits and consistency with the density") {
    const double mu = 6.0;
    const double sigma = std::sqrt(10.0);
    CHECK(lognormal_attenuation_cdf(std::pow(10.0, 0.6), mu, sigma) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(lognormal_attenuation_cdf(1e-300, mu, sigma) == doctest::Approx(0.0));
    CHECK_THROWS_AS(lognormal_attenuation_cdf(0.0, mu, sigma), std::domain_error);
    for (double y : {0.5, 1.0, 2.0, 5.0}) {
        const double h = 1e-5 * y;
        const double fd = (lognormal_attenuation_cdf(y + h, mu, sigma) - lognormal_attenuation_cdf(y - h, mu, sigma)) /
                          (2.0 * h);
        CHECK(std::abs(fd / lognormal_attenuation_pdf(y, mu, sigma) - 1.0) <= 1e-5);
    }
    for (double y = 1e-3; y < 1e4; y *= 1.7) {
        const double h = 1e-5 * y;
        const double fd = (lognormal_attenuation_cdf(y + h, 0.0, 4.0) - lognormal_attenuation_cdf(y - h, 0.0, 4.0)) /
                          (2.0 * h);
        const double cdf = lognormal_attenuation_cdf(y, 0.0, 4.0);
        if (cdf < 1e-6 || cdf > 1.0 - 1e-6) continue;
        CHECK(std::abs(fd / lognormal_attenuation_pdf(y, 0.0, 4.0) - 1.0) <= 1e-5);
    }
}
