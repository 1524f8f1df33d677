#include "ofdma/exactloss.hpp"
#include "ofdma/moments.hpp"
#include "ofdma/montecarlo.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

using namespace ofdma;

TEST_CASE("sample moments of the total demand") {
    for (const Scenario& s : {deterministic_reference_scenario(), shadowed_reference_scenario()}) {
        const MomentPair mv = moments_from_classes(class_masses(s));
        const auto totals = sample_total_demands(s, 200000, 11, 4);
        const SampleMoments sm = sample_moments(totals);
        CHECK(std::abs(sm.mean - mv.m) <= 4.0 * sm.standard_error());
        // Var of the sample variance is roughly (mu4 - v^2)/n; 4 SE with a generous kurtosis estimate.
        CHECK(std::abs(sm.variance - mv.v) <= 4.0 * mv.v * std::sqrt(3.0 / 200000.0));
    }
}

TEST_CASE("huge budget never overflows") {
    const auto est = estimate_loss(deterministic_reference_scenario(), 1e9, 5000, 3);
    CHECK(est.hits == 0);
    CHECK(est.p_hat == 0.0);
    CHECK(est.ci_low == 0.0);
    CHECK(est.sparse_hits);
}

TEST_CASE("interval contains the exact loss") {
    const Scenario s = deterministic_reference_scenario();
    const ClassMasses c = class_masses(s);
    const double m = moments_from_classes(c).m;
    for (double alpha : {1.2, 1.5}) {
        const double exact = exact_loss(c, alpha * m);
        const auto est = estimate_loss(s, alpha * m, 200000, 17, 4);
        CHECK(est.ci_low <= exact);
        CHECK(exact <= est.ci_high);
    }
}

TEST_CASE("results do not depend on the worker count") {
    const Scenario s = shadowed_reference_scenario();
    const auto a = sample_total_demands(s, 20000, 42, 1);
    const auto b = sample_total_demands(s, 20000, 42, 2);
    const auto c = sample_total_demands(s, 20000, 42, 8);
    CHECK(a == b);
    CHECK(a == c);
    const auto d = sample_total_demands(s, 20000, 43, 1);
    CHECK(a != d);
}

TEST_CASE("99% interval coverage over 200 seeds") {
    const Scenario s = deterministic_reference_scenario();
    const ClassMasses c = class_masses(s);
    const double n0 = 1.3 * moments_from_classes(c).m;
    const double exact = exact_loss(c, n0);
    REQUIRE(exact > 0.02);
    int covered = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto est = estimate_loss(s, n0, 4000, 1000 + seed, 2);
        if (est.ci_low <= exact && exact <= est.ci_high) ++covered;
    }
    CHECK(covered >= 193);
}

TEST_CASE("interval width scales as one over root n") {
    const Scenario s = shadowed_reference_scenario();
    const double n0 = 1.3 * moments_from_classes(class_masses(s)).m;
    const auto small = estimate_loss(s, n0, 25000, 5, 4);
    const auto large = estimate_loss(s, n0, 100000, 6, 4);
    const double ratio = (large.ci_high - large.ci_low) / (small.ci_high - small.ci_low);
    CHECK(ratio == doctest::Approx(0.5).epsilon(0.2));
}

TEST_CASE("Wilson interval") {
    const Interval i = wilson_interval(5, 10, 1.959963984540054);
    CHECK(i.low == doctest::Approx(0.2366).epsilon(1e-3));
    CHECK(i.high == doctest::Approx(0.7634).epsilon(1e-3));
    const Interval zero = wilson_interval(0, 1000);
    CHECK(zero.low == 0.0);
    CHECK(zero.high > 0.0);
    CHECK(zero.high < 0.01);
    const Interval all = wilson_interval(1000, 1000);
    CHECK(all.high == doctest::Approx(1.0));
    for (std::uint64_t k : {1u, 37u, 500u}) {
        const Interval a = wilson_interval(k, 1000);
        const Interval b = wilson_interval(1000 - k, 1000);
        CHECK(a.low == doctest::Approx(1.0 - b.high).epsilon(1e-12));
    }
}

TEST_CASE("argument checks and CSV records") {
    CHECK_THROWS_AS(estimate_loss(deterministic_reference_scenario(), 10.0, 999, 1), std::invalid_argument);
    const auto est = estimate_loss(deterministic_reference_scenario(), 40.0, 1000, 9);
    CHECK(est.n_reps == 1000);
    CHECK(est.rng.seed == 9);
    std::ostringstream out;
    write_mc_csv_header(out);
    write_mc_csv_row(out, 1.5, 40.0, est);
    CHECK(out.str().rfind("alpha,n0,p_hat,ci_low,ci_high,n_reps,seed\n1.5,40,", 0) == 0);
}
