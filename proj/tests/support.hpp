#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "linkhel/quat.hpp"
#include "linkhel/torusfields.hpp"

namespace testing {

using namespace linkhel;

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240917u);
    return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }
inline double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(rng()); }

inline Quat random_unit_quat() {
    Quat q{gaussian(), gaussian(), gaussian(), gaussian()};
    return (1.0 / norm(q)) * q;
}

inline Vec3 random_vec3() { return {gaussian(), gaussian(), gaussian()}; }

inline double max_abs_diff(const Quat& a, const Quat& b) {
    return std::max({std::abs(a.w - b.w), std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

inline double max_abs_diff(const Vec3& a, const Vec3& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

inline double max_abs(const ScalarField3& f) {
    double m = 0.0;
    for (double v : f.data()) m = std::max(m, std::abs(v));
    return m;
}

inline double max_abs(const VectorField3& v) {
    return std::max({max_abs(v.comp[0]), max_abs(v.comp[1]), max_abs(v.comp[2])});
}

inline double max_abs_diff(const ScalarField3& a, const ScalarField3& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double max_abs_diff(const VectorField3& a, const VectorField3& b) {
    return std::max({max_abs_diff(a.comp[0], b.comp[0]), max_abs_diff(a.comp[1], b.comp[1]),
                     max_abs_diff(a.comp[2], b.comp[2])});
}

inline double l2(const ScalarField3& f) {
    double s = 0.0;
    for (double v : f.data()) s += v * v;
    return std::sqrt(s);
}

inline double l2(const VectorField3& v) {
    return std::sqrt(l2(v.comp[0]) * l2(v.comp[0]) + l2(v.comp[1]) * l2(v.comp[1]) + l2(v.comp[2]) * l2(v.comp[2]));
}

template <class Fn>
ScalarField3 tabulate(int n, Fn&& fn) {
    ScalarField3 f(n);
    const double h = kTwoPi / n;
    for (int c = 0; c < n; ++c)
        for (int b = 0; b < n; ++b)
            for (int a = 0; a < n; ++a) f(a, b, c) = fn(a * h, b * h, c * h);
    return f;
}

inline ScalarField3 random_scalar(int n) {
    ScalarField3 f(n);
    for (auto& v : f.data()) v = gaussian();
    return f;
}

inline VectorField3 random_field(int n) { return {random_scalar(n), random_scalar(n), random_scalar(n)}; }

// Real trigonometric sum with random amplitudes on wave numbers |k_i| <= band.
inline ScalarField3 random_band_limited(int n, int band) {
    struct Mode {
        int l, m, k;
        double a, b;
    };
    std::vector<Mode> modes;
    for (int l = -band; l <= band; ++l)
        for (int m = -band; m <= band; ++m)
            for (int k = -band; k <= band; ++k) modes.push_back({l, m, k, gaussian(), gaussian()});
    return tabulate(n, [&](double s, double t, double u) {
        double acc = 0.0;
        for (const auto& md : modes) {
            const double ph = md.l * s + md.m * t + md.k * u;
            acc += md.a * std::cos(ph) + md.b * std::sin(ph);
        }
        return acc;
    });
}

// curl of a random band-limited potential plus a constant: divergence free,
// free of Nyquist content.
inline VectorField3 random_divergence_free(int n, int band) {
    VectorField3 potential(random_band_limited(n, band), random_band_limited(n, band), random_band_limited(n, band));
    VectorField3 v = curl(potential);
    const Vec3 offset = random_vec3();
    for (std::size_t i = 0; i < v.comp[0].size(); ++i) v.set(i, v.at(i) + offset);
    return v;
}

}  // namespace testing
