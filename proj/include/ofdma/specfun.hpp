#pragma once

namespace ofdma::specfun {

// Standard normal CDF, integral from -inf to x. Note: this is the lower
// integral, not the engineering "Q" tail.
double normal_cdf(double x) noexcept;

// Natural log of normal_cdf, usable far into the lower tail.
double log_normal_cdf(double x) noexcept;

// Standard normal density.
double normal_pdf(double x) noexcept;

// g(t) = (1+t) ln(1+t) - t, t >= 0. Throws std::domain_error for t < 0.
double g_func(double t);

/// Density of the shadowing attenuation S = 10^(Z/10), Z ~ Normal(mu_db, sigma_db^2).
/// Throws std::domain_error when y <= 0 or sigma_db <= 0.
double lognormal_attenuation_pdf(double y, double mu_db, double sigma_db);

/// P(S <= y) for the same S.
double lognormal_attenuation_cdf(double y, double mu_db, double sigma_db);

inline constexpr double kLn10 = 2.302585092994045684017991454684364208;
// 10 / ln 10: converts natural-log units to decibels.
inline constexpr double kDbPerNeper = 10.0 / kLn10;

}  // namespace ofdma::specfun
