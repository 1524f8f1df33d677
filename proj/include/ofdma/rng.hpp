#pragma once

#include <cstdint>
#include <random>

namespace ofdma {

// Identifies one independent random stream. Equal specs give bit-identical
// draws; replication i of a run uses stream i.
struct RngSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

// Portable generator: std::mt19937_64 (fully specified by the standard) seeded
// from a splitmix64 hash of (seed, stream). Distribution transforms are
// implemented here rather than with <random> distributions, whose algorithms
// are implementation-defined.
class Rng {
public:
    explicit Rng(const RngSpec& spec);

    // Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept;
    // Uniform on (0, 1).
    double uniform_open() noexcept;
    // Standard normal (Marsaglia polar method, caches the spare deviate).
    double normal() noexcept;
    // Poisson: inversion below mean 30, PTRS transformed rejection above.
    std::uint64_t poisson(double mean);

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace ofdma
