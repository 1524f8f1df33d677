#include "ofdma/montecarlo.hpp"

#include "ofdma/ppp.hpp"
#include "ofdma/report.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ofdma {

Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z) {
    if (trials == 0) {
        return {0.0, 1.0};
    }
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (p + z2 / (2.0 * n)) / denom;
    const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    Interval out{centre - half, centre + half};
    out.low = hits == 0 ? 0.0 : std::clamp(out.low, 0.0, p);
    out.high = hits == trials ? 1.0 : std::clamp(out.high, p, 1.0);
    return out;
}

std::uint32_t sample_total_demand(const Scenario& scenario, const DemandThresholds& thresholds, Rng& rng) {
    std::uint32_t total = 0;
    switch (scenario.mode) {
        case Mode::deterministic: {
            const PointConfiguration config = sample_cell(scenario, rng);
            for (const Point2& p : config.points) {
                total += static_cast<std::uint32_t>(demand_deterministic(p.norm(), scenario.radio));
            }
            break;
        }
        case Mode::shadowed: {
            const PointConfiguration config = sample_marked_cell(scenario, rng);
            const std::vector<double>& marks = *config.marks;
            for (std::size_t i = 0; i < config.size(); ++i) {
                const double load = marks[i] * std::pow(config.points[i].norm(), scenario.radio.gamma);
                if (const auto cls = thresholds.shadowed_class(load)) {
                    total += static_cast<std::uint32_t>(*cls);
                } else if (scenario.outage_policy == OutagePolicy::clamp_to_nmax) {
                    total += static_cast<std::uint32_t>(thresholds.n_max);
                }
            }
            break;
        }
        case Mode::multicell:
            throw std::invalid_argument("sample_total_demand: use the multicell simulator");
    }
    return total;
}

std::uint32_t sample_total_demand(const Scenario& scenario, Rng& rng) {
    return sample_total_demand(scenario, compute_thresholds(scenario), rng);
}

std::vector<std::uint32_t> sample_total_demands(const Scenario& scenario, std::uint64_t n_reps,
                                                std::uint64_t seed, unsigned workers) {
    scenario.validate();
    const DemandThresholds thresholds = compute_thresholds(scenario);
    return parallel_replications(n_reps, workers, [&](std::uint64_t i) {
        Rng rng(RngSpec{seed, i});
        return sample_total_demand(scenario, thresholds, rng);
    });
}

double SampleMoments::standard_error() const noexcept {
    return n == 0 ? 0.0 : std::sqrt(variance / static_cast<double>(n));
}

SampleMoments sample_moments(std::span<const std::uint32_t> totals) {
    SampleMoments out;
    out.n = totals.size();
    if (totals.empty()) return out;
    // Welford, in index order.
    double mean = 0.0;
    double m2 = 0.0;
    std::uint64_t k = 0;
    for (std::uint32_t t : totals) {
        ++k;
        const double x = static_cast<double>(t);
        const double delta = x - mean;
        mean += delta / static_cast<double>(k);
        m2 += delta * (x - mean);
    }
    out.mean = mean;
    out.variance = k > 1 ? m2 / static_cast<double>(k - 1) : 0.0;
    return out;
}

MCEstimate estimate_from_totals(std::span<const std::uint32_t> totals, double n0, std::uint64_t seed,
                                bool strict) {
    MCEstimate out;
    out.n_reps = totals.size();
    out.rng = RngSpec{seed, 0};
    for (std::uint32_t t : totals) {
        const double d = static_cast<double>(t);
        if (strict ? d > n0 : d >= n0) ++out.hits;
    }
    out.p_hat = out.n_reps == 0 ? 0.0 : static_cast<double>(out.hits) / static_cast<double>(out.n_reps);
    const Interval ci = wilson_interval(out.hits, out.n_reps);
    out.ci_low = ci.low;
    out.ci_high = ci.high;
    out.sparse_hits = out.hits < 20;
    return out;
}

std::vector<MCEstimate> estimate_losses(const Scenario& scenario, std::span<const double> n0s,
                                        std::uint64_t n_reps, std::uint64_t seed, unsigned workers,
                                        bool strict) {
    if (n_reps < 1000) {
        throw std::invalid_argument("estimate_loss: n_reps must be >= 1000");
    }
    const std::vector<std::uint32_t> totals = sample_total_demands(scenario, n_reps, seed, workers);
    std::vector<MCEstimate> out;
    out.reserve(n0s.size());
    for (double n0 : n0s) out.push_back(estimate_from_totals(totals, n0, seed, strict));
    return out;
}

MCEstimate estimate_loss(const Scenario& scenario, double n0, std::uint64_t n_reps, std::uint64_t seed,
                         unsigned workers, bool strict) {
    const double budgets[] = {n0};
    return estimate_losses(scenario, budgets, n_reps, seed, workers, strict).front();
}

void write_mc_csv_header(std::ostream& out) {
    out << "alpha,n0,p_hat,ci_low,ci_high,n_reps,seed\n";
}

void write_mc_csv_row(std::ostream& out, double alpha, double n0, const MCEstimate& estimate) {
    out << format_exact(alpha) << ',' << format_exact(n0) << ',' << format_exact(estimate.p_hat) << ','
        << format_exact(estimate.ci_low) << ',' << format_exact(estimate.ci_high) << ',' << estimate.n_reps
        << ',' << estimate.rng.seed << '\n';
}

}  // namespace ofdma
