#include "linkhel/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "linkhel/charmap.hpp"
#include "linkhel/errors.hpp"
#include "linkhel/parallel.hpp"
#include "linkhel/torusfields.hpp"

namespace linkhel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

void require_grid(int n, int minimum) {
    if (n < minimum || n % 2 != 0) {
        throw InvalidArgument("grid size must be even and at least " + std::to_string(minimum) + ", got " +
                              std::to_string(n));
    }
}

double nearest_distance(double value) { return std::abs(value - std::round(value)); }

std::string format(const char* fmt, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, value);
    return buf;
}

}  // namespace

DegreeResult subtorus_degree(const Link3& link, Axis axis, double frozen_value, int n, MapKind kind) {
    require_grid(n, 16);
    const auto map = kind == MapKind::symmetric ? g_map : g_async;
    const std::size_t count = static_cast<std::size_t>(n) * n;
    std::array<std::vector<double>, 3> g;
    for (auto& c : g) c.resize(count);
    parallel_for(0, n, [&](int lo, int hi) {
        for (int b = lo; b < hi; ++b) {
            for (int a = 0; a < n; ++a) {
                const double first = kTwoPi * a / n, second = kTwoPi * b / n;
                Vec3 value;
                switch (axis) {
                    case Axis::s: value = map(link, frozen_value, first, second); break;
                    case Axis::t: value = map(link, second, frozen_value, first); break;
                    case Axis::u: value = map(link, first, second, frozen_value); break;
                }
                const std::size_t i = static_cast<std::size_t>(a) + static_cast<std::size_t>(n) * b;
                g[0][i] = value.x;
                g[1][i] = value.y;
                g[2][i] = value.z;
            }
        }
    });
    const auto ds = planar_partials(g[0], n), dt = planar_partials(g[1], n), du = planar_partials(g[2], n);
    std::vector<double> density(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Vec3 value{g[0][i], g[1][i], g[2][i]};
        const Vec3 along_a{ds[0][i], dt[0][i], du[0][i]};
        const Vec3 along_b{ds[1][i], dt[1][i], du[1][i]};
        density[i] = triple(value, along_a, along_b);
    }
    const double h = kTwoPi / n;
    DegreeResult out;
    out.raw = NormalizationConvention::area_scale * h * h * pairwise_sum(density);
    out.degree = static_cast<int>(std::lround(out.raw));
    out.residual = nearest_distance(out.raw);
    if (out.residual > kDegreeResidualLimit) {
        throw DegenerateDegree("degree integral " + format("%.6f", out.raw) + " is not near an integer", out.raw);
    }
    return out;
}

double gauss_linking(const SpaceCurve& a, const SpaceCurve& b, int m, double min_distance) {
    if (m < 8) throw InvalidArgument("Gauss integral needs at least 8 nodes per curve");
    std::vector<Vec3> pa(static_cast<std::size_t>(m)), va(pa.size()), pb(pa.size()), vb(pa.size());
    for (int j = 0; j < m; ++j) {
        const double s = kTwoPi * j / m;
        pa[j] = a.position(s);
        va[j] = a.velocity(s);
        pb[j] = b.position(s);
        vb[j] = b.velocity(s);
    }
    std::vector<double> rows(pa.size());
    double closest = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
        std::vector<double> terms(pb.size());
        for (int j = 0; j < m; ++j) {
            const Vec3 diff = pa[i] - pb[j];
            const double dist = norm(diff);
            closest = std::min(closest, dist);
            terms[j] = triple(diff, va[i], vb[j]) / (dist * dist * dist);
        }
        rows[i] = pairwise_sum(terms);
    }
    if (closest <= min_distance) {
        throw CurvesTooClose("curves come within " + format("%.3g", closest) + " of each other");
    }
    const double h = kTwoPi / m;
    return h * h * pairwise_sum(rows) / (4.0 * kPi);
}

std::array<DegreeResult, 3> linking_degrees(const Link3& link, int n) {
    return {subtorus_degree(link, Axis::s, 0.0, n), subtorus_degree(link, Axis::t, 0.0, n),
            subtorus_degree(link, Axis::u, 0.0, n)};
}

InvariantReport milnor_mu(const Link3& link, int n) {
    require_grid(n, 16);
    InvariantReport report;
    report.grid_n = n;
    report.separation = link.separation();
    const auto degrees = linking_degrees(link, n);
    for (int i = 0; i < 3; ++i) {
        report.deg_raw[i] = degrees[i].raw;
        report.deg_residuals[i] = degrees[i].residual;
    }
    report.p = degrees[0].degree;
    report.q = degrees[1].degree;
    report.r = degrees[2].degree;
    if (report.p != 0 || report.q != 0 || report.r != 0) throw NonzeroLinking(report.p, report.q, report.r);

    const VectorField3 field = sample_VL(link, n);
    const Vec3 mean = field.mean();
    const double flux_scale = 4.0 * kPi * kPi;
    report.flux = {flux_scale * mean.x, flux_scale * mean.y, flux_scale * mean.z};
    static constexpr std::array<const char*, 3> kNames{"d/ds", "d/dt", "d/du"};
    const std::array<double, 3> means{mean.x, mean.y, mean.z};
    for (int i = 0; i < 3; ++i) {
        if (std::abs(means[i]) > kMeanWarningLevel) {
            report.warnings.push_back(std::string("mean of V_L along ") + kNames[i] + " is " +
                                      format("%.3e", means[i]) + "; grid may be too coarse");
        }
    }
    report.nu = helicity(field);
    report.nu_spectral = helicity_spectral(field);
    report.mu = report.nu / 2.0;
    report.mu_residual = nearest_distance(report.mu);
    return report;
}

InvariantReport milnor_mu_checked(const Link3& link, int n) {
    require_grid(n, 32);
    if ((n / 2) % 2 != 0) throw InvalidArgument("convergence check needs n divisible by 4");
    InvariantReport fine = milnor_mu(link, n);
    const InvariantReport coarse = milnor_mu(link, n / 2);
    fine.mu_coarse = coarse.mu;
    fine.coarse_grid_n = coarse.grid_n;
    fine.converged = std::abs(fine.mu - coarse.mu) <= kConvergenceTolerance;
    return fine;
}

BruteforceMu milnor_mu_bruteforce(const Link3& link, int n, int truncation) {
    if (n > kBruteforceMaxGrid) {
        throw GridTooLarge("brute-force triple linking is limited to grids of size <= " +
                           std::to_string(kBruteforceMaxGrid));
    }
    const BruteforceHelicity hel = helicity_bruteforce(sample_VL(link, n), truncation);
    return {hel.value / 2.0, hel.truncation_bound / 2.0};
}

}  // namespace linkhel
