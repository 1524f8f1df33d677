#include "ofdma/exactloss.hpp"
#include "ofdma/moments.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace ofdma;

namespace {

double poisson_pmf(double mean, int k) { return std::exp(k * std::log(mean) - mean - std::lgamma(k + 1.0)); }

}  // namespace

TEST_CASE("single class is Poisson") {
    const DemandDistribution d = converged_demand_distribution(ClassMasses{{3.5}});
    for (int k = 0; k < 30; ++k) CHECK(d.pmf[static_cast<std::size_t>(k)] == doctest::Approx(poisson_pmf(3.5, k)).epsilon(1e-12));
    CHECK(exact_loss(ClassMasses{{3.5}}, 4.0) == doctest::Approx(1.0 - d.pmf[0] - d.pmf[1] - d.pmf[2] - d.pmf[3] - d.pmf[4]));
}

TEST_CASE("two unit classes") {
    const DemandDistribution d = converged_demand_distribution(ClassMasses{{1.0, 1.0}});
    CHECK(d.pmf[0] == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    CHECK(d.pmf[1] == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    CHECK(d.pmf[2] == doctest::Approx(1.5 * std::exp(-2.0)).epsilon(1e-14));
}

TEST_CASE("mean and variance match the class moments") {
    for (const Scenario& s : {deterministic_reference_scenario(), shadowed_reference_scenario()}) {
        const ClassMasses c = class_masses(s);
        const MomentPair mv = moments_from_classes(c);
        const DemandDistribution d = converged_demand_distribution(c);
        CHECK(d.tail_mass < 1e-12);
        CHECK(std::abs(d.mean() / mv.m - 1.0) <= 1e-9);
        CHECK(std::abs(d.variance() / mv.v - 1.0) <= 1e-9);
        CHECK(exact_loss(c, 0.0) == doctest::Approx(1.0 - std::exp(-c.total())).epsilon(1e-12));
        CHECK(exact_loss(c, 0.0, false) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("exhaustive enumeration on a sparse cell") {
    const ClassMasses full = class_masses(deterministic_reference_scenario());
    ClassMasses c = full;
    for (double& l : c.lambdas) l /= 100.0;
    std::vector<double> oracle(200, 0.0);
    for (int a = 0; a < 20; ++a)
        for (int b = 0; b < 20; ++b)
            for (int e = 0; e < 20; ++e)
                oracle[static_cast<std::size_t>(a + 2 * b + 3 * e)] +=
                    poisson_pmf(c(1), a) * poisson_pmf(c(2), b) * poisson_pmf(c(3), e);
    const DemandDistribution d = converged_demand_distribution(c);
    for (std::size_t k = 0; k < 20; ++k) {
        const double got = k < d.pmf.size() ? d.pmf[k] : 0.0;
        CHECK(std::abs(got - oracle[k]) <= 1e-10);
    }
    for (int n0 = 0; n0 < 8; ++n0) {
        double tail = 0.0;
        for (std::size_t k = static_cast<std::size_t>(n0) + 1; k < oracle.size(); ++k) tail += oracle[k];
        CHECK(std::abs(exact_loss(c, n0) - tail) <= 1e-10);
    }
}

TEST_CASE("loss is non-increasing in the budget") {
    const ClassMasses c = class_masses(shadowed_reference_scenario());
    double previous = 1.0;
    for (double n0 = 0.0; n0 < 100.0; n0 += 0.5) {
        const double p = exact_loss(c, n0);
        CHECK(p <= previous);
        CHECK(exact_loss(c, n0, false) >= p);
        previous = p;
    }
    CHECK(previous < 1e-12);
}

TEST_CASE("truncation errors") {
    const ClassMasses c{{10.0, 5.0}};
    CHECK_THROWS_AS(demand_distribution(c, 0), std::invalid_argument);
    CHECK_THROWS_AS(demand_distribution(c, 5), std::domain_error);
    const DemandDistribution d = demand_distribution(c, 30);
    CHECK(d.tail_mass > 0.0);
    CHECK(d.exceedance(100.0, true) == doctest::Approx(d.tail_mass));
}
