#pragma once

#include <cmath>

namespace linkhel {

/// Chordal distance below which a point counts as sitting on the projection pole.
inline constexpr double kPoleEpsilon = 1e-6;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    constexpr Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    constexpr Vec3& operator*=(double a) { x *= a; y *= a; z *= a; return *this; }
    friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
    friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
    friend constexpr Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }
    friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
/// a . (b x c)
constexpr double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

/// Point of R^4 written as w + x i + y j + z k.
struct Quat {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    static constexpr Quat one() { return {1, 0, 0, 0}; }
    static constexpr Quat i() { return {0, 1, 0, 0}; }
    static constexpr Quat j() { return {0, 0, 1, 0}; }
    static constexpr Quat k() { return {0, 0, 0, 1}; }

    constexpr Vec3 vec() const { return {x, y, z}; }

    constexpr Quat& operator+=(const Quat& o) { w += o.w; x += o.x; y += o.y; z += o.z; return *this; }
    constexpr Quat& operator-=(const Quat& o) { w -= o.w; x -= o.x; y -= o.y; z -= o.z; return *this; }
    constexpr Quat& operator*=(double a) { w *= a; x *= a; y *= a; z *= a; return *this; }
    friend constexpr Quat operator+(Quat a, const Quat& b) { return a += b; }
    friend constexpr Quat operator-(Quat a, const Quat& b) { return a -= b; }
    friend constexpr Quat operator*(double s, Quat a) { return a *= s; }
    friend constexpr Quat operator*(Quat a, double s) { return a *= s; }
    friend constexpr Quat operator-(const Quat& a) { return {-a.w, -a.x, -a.y, -a.z}; }
    friend constexpr bool operator==(const Quat&, const Quat&) = default;
};

/// Hamilton product.
constexpr Quat quat_mul(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}
constexpr Quat operator*(const Quat& a, const Quat& b) { return quat_mul(a, b); }

constexpr Quat quat_conj(const Quat& a) { return {a.w, -a.x, -a.y, -a.z}; }

/// Euclidean inner product in R^4.
constexpr double dot(const Quat& a, const Quat& b) { return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Quat& a) { return std::sqrt(dot(a, a)); }
inline double distance(const Quat& a, const Quat& b) { return norm(a - b); }

inline bool is_unit(const Quat& q, double eps = 1e-12) { return std::abs(norm(q) - 1.0) <= eps; }

/// Stereographic projection of S^3 minus `pole` onto the 3-space orthogonal to `pole`.
/// Coordinates are taken in the basis (i p, j p, k p), so the result equals the
/// projection from 1 of v * conj(p); the antipode -p lands on the origin.
/// Throws PoleTooClose when v is within kPoleEpsilon of the pole.
Vec3 stereo_from_pole(const Quat& pole, const Quat& v);

/// Inverse of stereo_from_pole with pole 1: the origin goes to -1, the unit sphere is fixed.
Quat inverse_stereo(const Vec3& u);

}  // namespace linkhel
