#include "ofdma/quadrature.hpp"

#include "ofdma/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <vector>

namespace ofdma::quadrature {

namespace {

// Kronrod 15-point abscissae (positive half, descending) and weights; the
// Gauss 7-point rule uses every other node.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const noexcept { return error < other.error; }
};

Panel gauss_kronrod(const Function1D& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = fc * kWk[7];
    double gauss = fc * kWg[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXk[static_cast<std::size_t>(i)];
        const double pair = f(centre - dx) + f(centre + dx);
        kronrod += kWk[static_cast<std::size_t>(i)] * pair;
        if (i % 2 == 1) {
            gauss += kWg[static_cast<std::size_t>(i / 2)] * pair;
        }
    }
    kronrod *= half;
    gauss *= half;
    return Panel{a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

void QuadSpec::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
        throw std::invalid_argument("QuadSpec: tolerances must be > 0");
    }
    if (max_subdivisions < 1) {
        throw std::invalid_argument("QuadSpec: max_subdivisions must be >= 1");
    }
}

QuadResult integrate_1d(const Function1D& f, double a, double b, const QuadSpec& spec) {
    return integrate_1d(f, a, b, std::span<const double>{}, spec);
}

QuadResult integrate_1d(const Function1D& f, double a, double b, std::span<const double> breakpoints,
                        const QuadSpec& spec) {
    spec.validate();
    if (!(a < b)) {
        throw std::invalid_argument("integrate_1d: requires a < b");
    }
    std::vector<double> edges{a};
    for (double p : breakpoints) {
        if (p > a && p < b) edges.push_back(p);
    }
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<Panel> panels;
    double total = 0.0;
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel p = gauss_kronrod(f, edges[i], edges[i + 1]);
        total += p.value;
        total_error += p.error;
        panels.push(p);
    }
    QuadResult result;
    result.evaluations = 15 * static_cast<int>(panels.size());
    int subdivisions = static_cast<int>(panels.size());

    while (total_error > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (subdivisions >= spec.max_subdivisions) {
            result.converged = false;
            break;
        }
        const Panel worst = panels.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Panel collapsed to adjacent doubles; no further progress possible.
            result.converged = false;
            break;
        }
        panels.pop();
        const Panel left = gauss_kronrod(f, worst.a, mid);
        const Panel right = gauss_kronrod(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        result.evaluations += 30;
        ++subdivisions;
    }

    // Re-sum in a fixed order to avoid drift from the incremental updates.
    std::vector<Panel> all;
    all.reserve(panels.size());
    while (!panels.empty()) {
        all.push_back(panels.top());
        panels.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    result.value = 0.0;
    result.error_estimate = 0.0;
    for (const Panel& p : all) {
        result.value += p.value;
        result.error_estimate += p.error;
    }
    return result;
}

QuadResult integrate_gain_marginal(const Function1D& h, double mu_db, double sigma_db,
                                   std::span<const double> attenuation_breakpoints, const QuadSpec& spec) {
    if (!(sigma_db > 0.0)) {
        throw std::invalid_argument("integrate_gain_marginal: sigma_db must be > 0");
    }
    std::vector<double> z_breaks;
    z_breaks.reserve(attenuation_breakpoints.size());
    for (double y : attenuation_breakpoints) {
        if (y > 0.0) {
            z_breaks.push_back((10.0 * std::log10(y) - mu_db) / sigma_db);
        }
    }
    const auto integrand = [&](double z) {
        const double y = std::pow(10.0, (mu_db + sigma_db * z) / 10.0);
        return h(y) * specfun::normal_pdf(z);
    };
    return integrate_1d(integrand, -kNormalWindow, kNormalWindow, z_breaks, spec);
}

QuadResult integrate_angle(const Function1D& f, const QuadSpec& spec) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    int n = 32;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        sum += f(two_pi * i / n);
    }
    double value = sum * two_pi / n;
    QuadResult result;
    result.evaluations = n;
    constexpr int kMaxPanels = 1 << 14;
    while (true) {
        // Doubling only needs the new midpoints.
        double added = 0.0;
        for (int i = 0; i < n; ++i) {
            added += f(two_pi * (i + 0.5) / n);
        }
        result.evaluations += n;
        sum += added;
        n *= 2;
        const double refined = sum * two_pi / n;
        const double change = std::abs(refined - value);
        value = refined;
        if (change <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
            result.error_estimate = change;
            break;
        }
        if (n >= kMaxPanels) {
            result.error_estimate = change;
            result.converged = false;
            break;
        }
    }
    result.value = value;
    return result;
}

QuadResult integrate_polar_disk(const std::function<double(double, double)>& f, double radius,
                                const QuadSpec& spec) {
    spec.validate();
    if (!(radius > 0.0)) {
        throw std::invalid_argument("integrate_polar_disk: radius must be > 0");
    }
    bool angular_ok = true;
    int evaluations = 0;
    QuadSpec angular = spec;
    angular.abs_tol = spec.abs_tol / (2.0 * std::numbers::pi * radius);
    const auto radial = [&](double r) {
        const QuadResult ring = integrate_angle([&](double theta) { return f(r, theta); }, angular);
        angular_ok = angular_ok && ring.converged;
        evaluations += ring.evaluations;
        return r * ring.value;
    };
    QuadResult result = integrate_1d(radial, 0.0, radius, spec);
    result.converged = result.converged && angular_ok;
    result.evaluations = evaluations;
    return result;
}

}  // namespace ofdma::quadrature
