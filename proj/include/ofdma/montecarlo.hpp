#pragma once

#include "ofdma/model.hpp"
#include "ofdma/rng.hpp"

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace ofdma {

struct MCEstimate {
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    std::uint64_t n_reps = 0;
    std::uint64_t hits = 0;
    RngSpec rng;
    std::string method = "monte_carlo";
    // Fewer than 20 overload events: the interval is unreliable.
    bool sparse_hits = false;
};

struct Interval {
    double low = 0.0;
    double high = 1.0;
};

// two-sided 99% normal quantile
inline constexpr double kZ99 = 2.5758293035489004;

Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z = kZ99);

// Runs fn(i) for i in [0, n) across `workers` threads and returns the results
// in index order. Output does not depend on the worker count as long as fn(i)
// depends only on i.
template <typename Fn>
auto parallel_replications(std::uint64_t n, unsigned workers, Fn&& fn) {
    using Result = decltype(fn(std::uint64_t{}));
    std::vector<Result> out(n);
    workers = std::max(1u, workers);
    if (workers == 1 || n < 2 * workers) {
        for (std::uint64_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    const std::uint64_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&out, &fn, begin, end] {
            for (std::uint64_t i = begin; i < end; ++i) out[i] = fn(i);
        });
    }
    return out;
}

// Total subcarrier demand of one equilibrium snapshot (deterministic or
// shadowed scenario), applying the scenario's outage policy.
std::uint32_t sample_total_demand(const Scenario& scenario, const DemandThresholds& thresholds, Rng& rng);
std::uint32_t sample_total_demand(const Scenario& scenario, Rng& rng);

// Total demand of replications 0..n_reps-1, replication i on stream i of seed.
std::vector<std::uint32_t> sample_total_demands(const Scenario& scenario, std::uint64_t n_reps,
                                                std::uint64_t seed, unsigned workers = 1);

struct SampleMoments {
    double mean = 0.0;
    double variance = 0.0;
    std::uint64_t n = 0;

    double standard_error() const noexcept;
};

SampleMoments sample_moments(std::span<const std::uint32_t> totals);

// Indicator average of {total > n0} (or >= when !strict) with a Wilson 99% interval.
MCEstimate estimate_from_totals(std::span<const std::uint32_t> totals, double n0, std::uint64_t seed,
                                bool strict = true);

// Throws std::invalid_argument when n_reps < 1000.
MCEstimate estimate_loss(const Scenario& scenario, double n0, std::uint64_t n_reps, std::uint64_t seed,
                         unsigned workers = 1, bool strict = true);

// Several budgets from one set of replications.
std::vector<MCEstimate> estimate_losses(const Scenario& scenario, std::span<const double> n0s,
                                        std::uint64_t n_reps, std::uint64_t seed, unsigned workers = 1,
                                        bool strict = true);

// CSV record: alpha,n0,p_hat,ci_low,ci_high,n_reps,seed
void write_mc_csv_header(std::ostream& out);
void write_mc_csv_row(std::ostream& out, double alpha, double n0, const MCEstimate& estimate);

}  // namespace ofdma
