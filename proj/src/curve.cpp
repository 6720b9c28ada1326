#include "linkhel/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "linkhel/errors.hpp"

namespace linkhel {

namespace {

using cplx = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Below this norm an interpolated point cannot be projected to the sphere.
constexpr double kMinPointNorm = 1e-6;
// Target for max | ||c(s)|| - 1 |; a margin below the advertised 1e-8.
constexpr double kUnitTolerance = 1e-9;
// Highest modes below kTrimTolerance are dropped while their summed magnitude
// stays below kTrimBudget.
constexpr double kTrimTolerance = 1e-15;
constexpr double kTrimBudget = 1e-12;

double component(const Quat& q, int c) {
    switch (c) {
        case 0: return q.w;
        case 1: return q.x;
        case 2: return q.y;
        default: return q.z;
    }
}

// Trigonometric interpolant through points at s_j = 2 pi j / M.
TrigPoly4 interpolate(std::span<const Quat> points) {
    const int m = static_cast<int>(points.size());
    TrigPoly4 poly;
    poly.degree = m / 2;
    std::vector<cplx> roots(static_cast<std::size_t>(m));
    for (int n = 0; n < m; ++n) roots[n] = std::polar(1.0, -kTwoPi * n / m);
    for (int c = 0; c < 4; ++c) {
        auto& out = poly.coeffs[c];
        out.assign(static_cast<std::size_t>(poly.degree + 1), cplx{});
        for (int k = 0; k <= poly.degree; ++k) {
            cplx acc{};
            for (int j = 0; j < m; ++j) acc += component(points[j], c) * roots[(static_cast<long>(j) * k) % m];
            out[k] = acc / static_cast<double>(m);
        }
        out[0] = out[0].real();
        if (m % 2 == 0) out[poly.degree] = 0.5 * out[poly.degree].real();
    }
    return poly;
}

void trim(TrigPoly4& poly) {
    double tail = 0.0;
    while (poly.degree > 0) {
        double top = 0.0;
        for (const auto& c : poly.coeffs) top = std::max(top, 2.0 * std::abs(c[poly.degree]));
        if (top > kTrimTolerance || tail + top > kTrimBudget) break;
        tail += top;
        --poly.degree;
    }
    for (auto& c : poly.coeffs) c.resize(static_cast<std::size_t>(poly.degree + 1));
}

double unit_deviation(const TrigPoly4& poly, int n) {
    double worst = 0.0;
    for (int a = 0; a < n; ++a) {
        const double s = kTwoPi * (a + 0.5) / n;
        worst = std::max(worst, std::abs(norm(poly.eval(s)) - 1.0));
    }
    return worst;
}

int check_points(int count) {
    if (count < 8) {
        throw InvalidArgument("a curve needs at least 8 samples, got " + std::to_string(count));
    }
    return count;
}

// Resample densely, push every sample onto the sphere and re-interpolate. The
// dense grid is refined until the unit-norm invariant holds between nodes.
TrigPoly4 project_to_sphere(const TrigPoly4& initial, int base_count) {
    for (int count = 4 * base_count; count <= 64 * base_count; count *= 2) {
        std::vector<Quat> dense(static_cast<std::size_t>(count));
        for (int a = 0; a < count; ++a) {
            const Quat q = initial.eval(kTwoPi * a / count);
            const double len = norm(q);
            if (len < kMinPointNorm) {
                throw DegenerateCurve("interpolated curve passes within " + std::to_string(kMinPointNorm) +
                                      " of the origin");
            }
            dense[a] = (1.0 / len) * q;
        }
        TrigPoly4 poly = interpolate(dense);
        trim(poly);
        if (unit_deviation(poly, 2 * count) <= kUnitTolerance) return poly;
    }
    throw DegenerateCurve("could not enforce the unit-norm constraint on the curve");
}

}  // namespace

Quat TrigPoly4::eval(double s) const {
    const cplx step = std::polar(1.0, s);
    cplx phase{1.0, 0.0};
    std::array<double, 4> sum{};
    for (int c = 0; c < 4; ++c) sum[c] = coeffs[c][0].real();
    for (int k = 1; k <= degree; ++k) {
        phase *= step;
        for (int c = 0; c < 4; ++c) sum[c] += 2.0 * (coeffs[c][k] * phase).real();
    }
    return {sum[0], sum[1], sum[2], sum[3]};
}

Quat TrigPoly4::eval_deriv(double s) const {
    const cplx step = std::polar(1.0, s);
    cplx phase{1.0, 0.0};
    std::array<double, 4> sum{};
    for (int k = 1; k <= degree; ++k) {
        phase *= step;
        const cplx ik{0.0, static_cast<double>(k)};
        for (int c = 0; c < 4; ++c) sum[c] += 2.0 * (ik * coeffs[c][k] * phase).real();
    }
    return {sum[0], sum[1], sum[2], sum[3]};
}

CurveS3::CurveS3(TrigPoly4 poly, int orientation) : poly_(std::move(poly)), orientation_(orientation) {
    if (orientation_ != 1 && orientation_ != -1) {
        throw InvalidArgument("orientation must be +1 or -1");
    }
}

CurveS3 CurveS3::from_samples(std::span<const Quat> points, int orientation) {
    const int m = check_points(static_cast<int>(points.size()));
    std::vector<Quat> unit(points.begin(), points.end());
    for (auto& q : unit) {
        const double len = norm(q);
        if (len < kMinPointNorm) throw DegenerateCurve("sample point at the origin cannot be placed on S^3");
        q = (1.0 / len) * q;
    }
    return CurveS3(project_to_sphere(interpolate(unit), m), orientation);
}

CurveS3 CurveS3::from_samples(std::span<const Vec3> points, int orientation) {
    check_points(static_cast<int>(points.size()));
    std::vector<Quat> lifted;
    lifted.reserve(points.size());
    for (const auto& p : points) lifted.push_back(inverse_stereo(p));
    return from_samples(std::span<const Quat>(lifted), orientation);
}

CurveS3 CurveS3::from_coefficients(TrigPoly4 poly, int orientation) {
    if (poly.degree < 0) throw InvalidArgument("negative curve degree");
    for (const auto& c : poly.coeffs) {
        if (static_cast<int>(c.size()) != poly.degree + 1) {
            throw InvalidArgument("coefficient table does not match the curve degree");
        }
    }
    for (auto& c : poly.coeffs) c[0] = c[0].real();
    const int check = std::max(64, 8 * (poly.degree + 1));
    if (unit_deviation(poly, check) <= kUnitTolerance) return CurveS3(std::move(poly), orientation);
    return CurveS3(project_to_sphere(poly, std::max(16, 2 * poly.degree + 1)), orientation);
}

std::vector<Quat> CurveS3::sample(int n) const {
    std::vector<Quat> out(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) out[a] = eval(kTwoPi * a / n);
    return out;
}

CurveS3 CurveS3::reflected(int coordinate) const {
    if (coordinate < 0 || coordinate > 3) throw InvalidArgument("reflection coordinate must be in 0..3");
    TrigPoly4 poly = poly_;
    for (auto& c : poly.coeffs[coordinate]) c = -c;
    return CurveS3(std::move(poly), orientation_);
}

double CurveS3::max_unit_deviation(int n) const { return unit_deviation(poly_, n); }

double sampled_distance(const CurveS3& a, const CurveS3& b, int n) {
    const auto pa = a.sample(n);
    const auto pb = b.sample(n);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : pa) {
        for (const auto& q : pb) best = std::min(best, distance(p, q));
    }
    return best;
}

Link3::Link3(CurveS3 x, CurveS3 y, CurveS3 z, double min_separation)
    : components_{std::move(x), std::move(y), std::move(z)} {
    int max_degree = 0;
    for (const auto& c : components_) max_degree = std::max(max_degree, c.degree());
    const int n = std::max(256, 8 * (max_degree + 1));
    separation_ = std::numeric_limits<double>::infinity();
    static constexpr std::array<std::array<int, 2>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};
    static constexpr std::array<char, 3> kNames{'X', 'Y', 'Z'};
    for (const auto& [i, j] : kPairs) {
        const double d = sampled_distance(components_[i], components_[j], n);
        if (d <= min_separation) {
            throw ComponentsTooClose(std::string("components ") + kNames[i] + " and " + kNames[j] +
                                     " come within chordal distance " + std::to_string(d) +
                                     " (minimum " + std::to_string(min_separation) + ")");
        }
        separation_ = std::min(separation_, d);
    }
}

SpaceCurve stereographic_image(const CurveS3& curve, const Quat& pole) {
    SpaceCurve out;
    out.position = [curve, pole](double s) { return stereo_from_pole(pole, curve.eval(s)); };
    out.velocity = [curve, pole](double s) {
        const Quat rotation = quat_conj(pole);
        const Quat p = curve.eval(s) * rotation;
        const Quat dp = curve.eval_deriv(s) * rotation;
        const double denom = 1.0 - p.w;
        return dp.vec() / denom + (dp.w / (denom * denom)) * p.vec();
    };
    return out;
}

}  // namespace linkhel
