#include "ofdma/multicell.hpp"

#include "ofdma/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ofdma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-position constants of the serving probability written in the
// standardized serving shadow z (S_0 = 10^((mu + sigma z)/10)):
// P(serve | z) = prod_j Phi(offset_j - z).
struct ServeKernel {
    std::vector<double> offsets;
    bool always = false;  // no interferers, or the user sits on y0 (max_sir)
    bool never = false;

    double operator()(double z) const noexcept {
        if (never) return 0.0;
        if (always) return 1.0;
        double p = 1.0;
        for (double c : offsets) {
            p *= specfun::normal_cdf(c - z);
            if (p == 0.0) break;
        }
        return p;
    }
};

ServeKernel make_kernel(const Point2& x, const MulticellScenario& scenario) {
    ServeKernel kernel;
    const auto& layout = scenario.layout;
    if (layout.interferers.empty()) {
        kernel.always = true;
        return kernel;
    }
    const double sigma = scenario.base.shadowing->sigma_db;
    const double scale = 10.0 * scenario.base.radio.gamma / sigma;
    const double d0 = distance(x, layout.serving);
    kernel.offsets.reserve(layout.interferers.size());
    for (const Point2& y : layout.interferers) {
        const double dj = distance(x, y);
        const double ratio = scenario.association == Association::max_sir ? dj / d0 : d0 / dj;
        // ratio 0 -> Phi(-inf) = 0; ratio inf -> factor 1.
        const double offset = ratio == 0.0 ? -kInf : (std::isinf(ratio) ? kInf : scale * std::log10(ratio));
        if (offset == -kInf) {
            kernel.never = true;
            return kernel;
        }
        if (offset != kInf) kernel.offsets.push_back(offset);
    }
    kernel.always = kernel.offsets.empty();
    return kernel;
}

// z-boundaries of demand classes at distance d0 from y0. edges[j-1], edges[j]
// bracket class j; the last upper edge is +inf or the admission edge.
std::vector<double> class_edges(double d0, const MulticellScenario& scenario, const DemandThresholds& thresholds) {
    const auto [mu, sigma] = *scenario.base.shadowing;
    const double log_path = scenario.base.radio.gamma * std::log10(d0);
    const auto to_z = [&](double tilde_beta) {
        if (d0 == 0.0) return kInf;
        return (10.0 * (std::log10(tilde_beta) - log_path) - mu) / sigma;
    };
    std::vector<double> edges;
    edges.reserve(static_cast<std::size_t>(thresholds.n_max) + 1);
    edges.push_back(-kInf);
    for (int j = 1; j < thresholds.n_max; ++j) {
        edges.push_back(to_z(thresholds.tilde_betas[static_cast<std::size_t>(j)]));
    }
    edges.push_back(scenario.base.outage_policy == OutagePolicy::clamp_to_nmax ? kInf
                                                                                : to_z(thresholds.admission_limit));
    return edges;
}

double window_integral(const ServeKernel& kernel, double lo, double hi, const quadrature::QuadSpec& inner) {
    lo = std::max(lo, -quadrature::kNormalWindow);
    hi = std::min(hi, quadrature::kNormalWindow);
    if (!(hi > lo)) return 0.0;
    if (kernel.never) return 0.0;
    if (kernel.always) return specfun::normal_cdf(hi) - specfun::normal_cdf(lo);
    return quadrature::integrate_1d([&](double z) { return kernel(z) * specfun::normal_pdf(z); }, lo, hi, inner)
        .value;
}

quadrature::QuadSpec inner_spec() {
    return quadrature::QuadSpec{1e-12, 1e-9, 200};
}

Point2 polar(double r, double theta) {
    return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace

std::string_view to_string(Association association) noexcept {
    switch (association) {
        case Association::max_sir: return "max_sir";
        case Association::paper_literal: return "paper_literal";
    }
    return "unknown";
}

void AntennaLayout::validate() const {
    std::vector<Point2> all{serving};
    all.insert(all.end(), interferers.begin(), interferers.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t k = i + 1; k < all.size(); ++k) {
            if (distance(all[i], all[k]) == 0.0) {
                throw std::invalid_argument("antenna layout: positions must be pairwise distinct");
            }
        }
    }
}

void MulticellScenario::validate() const {
    Scenario check = base;
    check.mode = Mode::multicell;
    check.validate();
    layout.validate();
    double reach = 0.0;
    for (const Point2& y : layout.interferers) reach = std::max(reach, y.norm());
    if (!(region_radius >= reach + base.cell.radius)) {
        throw std::invalid_argument("region_radius must cover the farthest interferer plus the cell radius");
    }
}

double default_region_radius(const Scenario& base, const AntennaLayout& layout) {
    double reach = 0.0;
    for (const Point2& y : layout.interferers) reach = std::max(reach, y.norm());
    return std::max(6.0 * base.cell.radius, reach + 4.0 * base.cell.radius);
}

MulticellScenario make_multicell(Scenario base, AntennaLayout layout, Association association) {
    base.mode = Mode::multicell;
    base.outage_policy = OutagePolicy::exclude;
    MulticellScenario out;
    out.region_radius = default_region_radius(base, layout);
    out.base = std::move(base);
    out.layout = std::move(layout);
    out.association = association;
    return out;
}

AntennaLayout hex_layout(double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("hex_layout: radius must be > 0");
    const double h = radius * std::sqrt(3.0);
    AntennaLayout layout;
    layout.serving = {0.0, 0.0};
    layout.interferers = {{2.0 * radius, 0.0}, {radius, h},   {-radius, h},
                          {-2.0 * radius, 0.0}, {-radius, -h}, {radius, -h}};
    return layout;
}

AntennaLayout read_layout(std::istream& in) {
    std::vector<Point2> points;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        Point2 p;
        if (!(fields >> p.x)) continue;
        std::string extra;
        if (!(fields >> p.y) || (fields >> extra)) {
            throw std::invalid_argument("layout line " + std::to_string(line_no) + ": expected \"x y\"");
        }
        points.push_back(p);
    }
    if (points.empty()) throw std::invalid_argument("layout: no serving antenna");
    AntennaLayout layout;
    layout.serving = points.front();
    layout.interferers.assign(points.begin() + 1, points.end());
    layout.validate();
    return layout;
}

AntennaLayout load_layout(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open layout file: " + path);
    return read_layout(in);
}

void write_layout(std::ostream& out, const AntennaLayout& layout) {
    const auto precision = out.precision(17);
    out << layout.serving.x << ' ' << layout.serving.y << '\n';
    for (const Point2& y : layout.interferers) out << y.x << ' ' << y.y << '\n';
    out.precision(precision);
}

double serve_probability(const Point2& x, double g, const MulticellScenario& scenario) {
    if (!(g > 0.0)) throw std::invalid_argument("serve_probability: g must be > 0");
    if (!scenario.base.shadowing) throw std::invalid_argument("serve_probability: shadowing required");
    const ServeKernel kernel = make_kernel(x, scenario);
    const auto [mu, sigma] = *scenario.base.shadowing;
    // g = 1/S_0 = 10^(-(mu + sigma z)/10)
    const double z = (-10.0 * std::log10(g) - mu) / sigma;
    return kernel(z);
}

quadrature::QuadSpec multicell_default_spec() {
    return quadrature::QuadSpec{1e-6, 1e-7, 4000};
}

MulticellMasses multicell_class_masses(const MulticellScenario& scenario, const quadrature::QuadSpec& spec,
                                       unsigned workers) {
    scenario.validate();
    Scenario base = scenario.base;
    base.mode = Mode::multicell;
    const DemandThresholds thresholds = compute_thresholds(base);
    const int n_max = thresholds.n_max;
    const quadrature::QuadSpec inner = inner_spec();

    MulticellMasses out;
    out.classes.lambdas.assign(static_cast<std::size_t>(n_max), 0.0);
    std::vector<char> converged(static_cast<std::size_t>(n_max), 1);

    const auto run_class = [&](int j) {
        const auto integrand = [&](double r, double theta) {
            const Point2 x = polar(r, theta);
            const double d0 = distance(x, scenario.layout.serving);
            const ServeKernel kernel = make_kernel(x, scenario);
            if (d0 == 0.0) {
                // Infinite SIR at the serving antenna: everything is class 1.
                return j == 1 && !kernel.never ? 1.0 : 0.0;
            }
            const std::vector<double> edges = class_edges(d0, scenario, thresholds);
            return window_integral(kernel, edges[static_cast<std::size_t>(j - 1)],
                                   edges[static_cast<std::size_t>(j)], inner);
        };
        const quadrature::QuadResult res =
            quadrature::integrate_polar_disk(integrand, scenario.region_radius, spec);
        out.classes.lambdas[static_cast<std::size_t>(j - 1)] = base.traffic.intensity() * res.value;
        converged[static_cast<std::size_t>(j - 1)] = res.converged ? 1 : 0;
    };

    workers = std::max(1u, workers);
    if (workers == 1) {
        for (int j = 1; j <= n_max; ++j) run_class(j);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                for (int j = 1 + static_cast<int>(w); j <= n_max; j += static_cast<int>(workers)) run_class(j);
            });
        }
    }
    out.converged = std::all_of(converged.begin(), converged.end(), [](char c) { return c != 0; });
    return out;
}

double association_mass(const MulticellScenario& scenario, const quadrature::QuadSpec& spec) {
    scenario.validate();
    const quadrature::QuadSpec inner = inner_spec();
    const auto integrand = [&](double r, double theta) {
        const ServeKernel kernel = make_kernel(polar(r, theta), scenario);
        return window_integral(kernel, -kInf, kInf, inner);
    };
    return scenario.base.traffic.intensity() *
           quadrature::integrate_polar_disk(integrand, scenario.region_radius, spec).value;
}

std::uint32_t sample_multicell_total_demand(const MulticellScenario& scenario, const DemandThresholds& thresholds,
                                            Rng& rng) {
    const Scenario& base = scenario.base;
    const double region = scenario.region_radius;
    const double mass = std::numbers::pi * region * region * base.traffic.intensity();
    const std::vector<Point2> users = sample_disk(sample_count(mass, rng), region, rng);
    const std::size_t antennas = scenario.layout.interferers.size() + 1;
    const double gamma = base.radio.gamma;

    const auto [mu, sigma] = *base.shadowing;
    // Path loss in dB is 10 gamma log10 d.
    const double db_per_decade = 10.0 * gamma;
    std::uint32_t total = 0;
    for (const Point2& x : users) {
        const double d0 = distance(x, scenario.layout.serving);
        const double z0 = rng.normal();
        const double s0 = std::pow(10.0, (mu + sigma * z0) / 10.0);
        const double own_db = db_per_decade * std::log10(d0);
        bool served = true;
        for (std::size_t k = 1; k < antennas && served; ++k) {
            const double zk = rng.normal();
            const double other_db = db_per_decade * std::log10(distance(x, scenario.layout.interferers[k - 1]));
            // Smaller shadowing-plus-path loss means higher SIR.
            served = scenario.association == Association::max_sir
                         ? !(sigma * zk + other_db < sigma * z0 + own_db)
                         : !(sigma * zk + own_db < sigma * z0 + other_db);
        }
        if (!served) continue;
        if (const auto cls = thresholds.shadowed_class(s0 * std::pow(d0, gamma))) {
            total += static_cast<std::uint32_t>(*cls);
        } else if (base.outage_policy == OutagePolicy::clamp_to_nmax) {
            total += static_cast<std::uint32_t>(thresholds.n_max);
        }
    }
    return total;
}

std::vector<std::uint32_t> sample_multicell_totals(const MulticellScenario& scenario, std::uint64_t n_reps,
                                                   std::uint64_t seed, unsigned workers) {
    scenario.validate();
    Scenario base = scenario.base;
    base.mode = Mode::multicell;
    const DemandThresholds thresholds = compute_thresholds(base);
    return parallel_replications(n_reps, workers, [&](std::uint64_t i) {
        Rng rng(RngSpec{seed, i});
        return sample_multicell_total_demand(scenario, thresholds, rng);
    });
}

MCEstimate estimate_loss_multicell(const MulticellScenario& scenario, double n0, std::uint64_t n_reps,
                                   std::uint64_t seed, unsigned workers, bool strict) {
    if (n_reps < 1000) throw std::invalid_argument("estimate_loss_multicell: n_reps must be >= 1000");
    const std::vector<std::uint32_t> totals = sample_multicell_totals(scenario, n_reps, seed, workers);
    MCEstimate out = estimate_from_totals(totals, n0, seed, strict);
    out.method = "monte_carlo_multicell";
    return out;
}

}  // namespace ofdma
