#pragma once

#include <numbers>

#include "linkhel/curve.hpp"
#include "linkhel/quat.hpp"
#include "linkhel/torusfields.hpp"

namespace linkhel {

/// Threshold on ||F|| below which a triple counts as degenerate.
inline constexpr double kMinGrassmannNorm = 1e-9;

/// Scale turning the solid-angle form of the unit sphere into the area form of
/// total mass 1.
struct NormalizationConvention {
    static constexpr double area_scale = 1.0 / (4.0 * std::numbers::pi);
};

/// Three points of S^3, assumed pairwise distinct.
struct TriplePoint {
    Quat x, y, z;
};

/// F(x,y,z): for each unit e in (i, j, k) the component x.(e y) + y.(e z) + z.(e x).
/// Its norm is twice the area of the triangle xyz.
Vec3 grassmann_F(const TriplePoint& p);

/// The characteristic map g_L = F / ||F|| at parameters (s, t, u).
/// Throws NearDegenerateTriple when ||F|| < kMinGrassmannNorm.
Vec3 g_map(const Link3& link, double s, double t, double u);

/// Asymmetric map: normalized difference of the projections from 1 of y conj(x)
/// and z conj(x). Throws PoleTooClose or NearDegenerateTriple.
Vec3 g_async(const Link3& link, double s, double t, double u);

/// F sampled on the n^3 torus grid (components along the unit i, j, k).
VectorField3 sample_F(const Link3& link, int n);

/// V_L on the n^3 grid: component along d/ds is (F_t x F_u . F) / (4 pi |F|^3),
/// cyclically for t and u, with F's partials taken spectrally from the grid.
/// Requires n even and >= 8. Throws NearDegenerateTriple.
VectorField3 sample_VL(const Link3& link, int n);

}  // namespace linkhel
