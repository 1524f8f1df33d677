#include "ofdma/exactloss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ofdma {

namespace {

// Neumaier compensated accumulator.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            compensation_ += (sum_ - t) + x;
        } else {
            compensation_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

// Poisson(mean) pmf up to the point where the remaining tail is below 1e-15.
std::vector<double> truncated_poisson(double mean) {
    std::vector<double> pmf;
    if (mean <= 0.0) {
        pmf.push_back(1.0);
        return pmf;
    }
    const double log_mean = std::log(mean);
    for (std::size_t k = 0;; ++k) {
        const double kd = static_cast<double>(k);
        const double p = std::exp(-mean + kd * log_mean - std::lgamma(kd + 1.0));
        pmf.push_back(p);
        if (kd + 1.0 > mean) {
            // Geometric bound on the remaining tail: p_{k+1} / (1 - mean / (k + 2)).
            const double next = p * mean / (kd + 1.0);
            const double ratio = mean / (kd + 2.0);
            if (ratio < 1.0 && next / (1.0 - ratio) < 1e-15) {
                break;
            }
        }
    }
    return pmf;
}

}  // namespace

double DemandDistribution::mean() const noexcept {
    CompensatedSum sum;
    for (std::size_t k = 0; k < pmf.size(); ++k) sum.add(static_cast<double>(k) * pmf[k]);
    return sum.value();
}

double DemandDistribution::variance() const noexcept {
    const double mu = mean();
    CompensatedSum sum;
    for (std::size_t k = 0; k < pmf.size(); ++k) {
        const double d = static_cast<double>(k) - mu;
        sum.add(d * d * pmf[k]);
    }
    return sum.value();
}

double DemandDistribution::exceedance(double n0, bool strict) const noexcept {
    CompensatedSum sum;
    sum.add(tail_mass);
    for (std::size_t k = pmf.size(); k-- > 0;) {
        const double kd = static_cast<double>(k);
        if (strict ? kd > n0 : kd >= n0) {
            sum.add(pmf[k]);
        } else {
            break;
        }
    }
    return std::clamp(sum.value(), 0.0, 1.0);
}

DemandDistribution demand_distribution(const ClassMasses& classes, std::size_t d_max) {
    if (d_max < 1) {
        throw std::invalid_argument("demand_distribution: d_max must be >= 1");
    }
    std::vector<double> current(d_max + 1, 0.0);
    current[0] = 1.0;
    std::vector<double> next(d_max + 1);
    for (int j = 1; j <= classes.n_max(); ++j) {
        const double lambda = classes(j);
        if (!(lambda >= 0.0)) {
            throw std::invalid_argument("demand_distribution: class masses must be >= 0");
        }
        if (lambda == 0.0) {
            continue;
        }
        const std::vector<double> counts = truncated_poisson(lambda);
        const auto step = static_cast<std::size_t>(j);
        for (std::size_t d = 0; d <= d_max; ++d) {
            CompensatedSum sum;
            for (std::size_t k = 0; k < counts.size() && k * step <= d; ++k) {
                sum.add(counts[k] * current[d - k * step]);
            }
            next[d] = sum.value();
        }
        current.swap(next);
    }
    CompensatedSum total;
    for (double p : current) total.add(p);
    DemandDistribution out;
    out.tail_mass = std::max(0.0, 1.0 - total.value());
    if (out.tail_mass > 0.5) {
        throw std::domain_error("demand_distribution: d_max too small, more than half the mass is truncated");
    }
    out.pmf = std::move(current);
    return out;
}

DemandDistribution converged_demand_distribution(const ClassMasses& classes) {
    const MomentPair moments = moments_from_classes(classes);
    auto d_max = static_cast<std::size_t>(
        std::ceil(moments.m + 12.0 * std::sqrt(moments.v) + 10.0 * classes.n_max()));
    d_max = std::max<std::size_t>(d_max, 16);
    while (true) {
        // Small d_max can throw on the >0.5 guard; widen until it doesn't.
        try {
            DemandDistribution dist = demand_distribution(classes, d_max);
            if (dist.tail_mass < 1e-12) {
                return dist;
            }
        } catch (const std::domain_error&) {
        }
        if (d_max > (std::size_t{1} << 26)) {
            throw std::runtime_error("exact_loss: demand distribution failed to converge");
        }
        d_max *= 2;
    }
}

double exact_loss(const ClassMasses& classes, double n0, bool strict) {
    if (!(n0 >= 0.0)) {
        throw std::invalid_argument("exact_loss: n0 must be >= 0");
    }
    return converged_demand_distribution(classes).exceedance(n0, strict);
}

}  // namespace ofdma
