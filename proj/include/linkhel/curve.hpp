#pragma once

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "linkhel/quat.hpp"

namespace linkhel {

/// Default minimum chordal distance between distinct link components.
inline constexpr double kDefaultSeparation = 1e-3;

/// Real trigonometric polynomial in four coordinates, stored by its non-negative
/// Fourier coefficients: P(s) = c_0 + 2 Re sum_{k=1..D} c_k e^{iks}.
struct TrigPoly4 {
    int degree = 0;
    /// coeffs[coordinate][k], coordinate order (w, x, y, z), k = 0..degree.
    std::array<std::vector<std::complex<double>>, 4> coeffs;

    Quat eval(double s) const;
    Quat eval_deriv(double s) const;
};

/// Smooth closed curve on the unit 3-sphere, parametrized over [0, 2pi).
///
/// The curve is stored as a trigonometric polynomial P together with an
/// orientation sign o, and traversed as s -> P(o s). All members are const
/// after construction.
class CurveS3 {
public:
    /// Interpolates M >= 8 points of S^3 (normalized first) at s_j = 2 pi j / M
    /// and projects the interpolant back onto the sphere.
    /// Throws DegenerateCurve when the interpolant passes near the origin.
    static CurveS3 from_samples(std::span<const Quat> points, int orientation = +1);

    /// Same, for points of R^3 lifted to S^3 through inverse_stereo.
    static CurveS3 from_samples(std::span<const Vec3> points, int orientation = +1);

    /// Adopts a coefficient table as-is when it already satisfies the unit-norm
    /// invariant, otherwise projects it onto the sphere like from_samples.
    static CurveS3 from_coefficients(TrigPoly4 poly, int orientation = +1);

    Quat eval(double s) const { return poly_.eval(orientation_ * s); }
    Quat eval_deriv(double s) const { return orientation_ * poly_.eval_deriv(orientation_ * s); }

    /// Points at s = 2 pi a / n, a = 0..n-1.
    std::vector<Quat> sample(int n) const;

    int degree() const noexcept { return poly_.degree; }
    int orientation() const noexcept { return orientation_; }
    const TrigPoly4& poly() const noexcept { return poly_; }

    CurveS3 reversed() const { return CurveS3(poly_, -orientation_); }
    /// Reflection of R^4 negating one coordinate (0 = w, ..., 3 = z).
    CurveS3 reflected(int coordinate) const;

    /// max | ||c(s)|| - 1 | over `n` equally spaced parameters offset by half a step.
    double max_unit_deviation(int n) const;

private:
    CurveS3(TrigPoly4 poly, int orientation);

    TrigPoly4 poly_;
    int orientation_ = 1;
};

/// Ordered, oriented triple of pairwise separated curves (X, Y, Z).
class Link3 {
public:
    /// Throws ComponentsTooClose if two components come within `min_separation`
    /// (chordal) of each other on a dense parameter sampling.
    Link3(CurveS3 x, CurveS3 y, CurveS3 z, double min_separation = kDefaultSeparation);

    const CurveS3& x() const noexcept { return components_[0]; }
    const CurveS3& y() const noexcept { return components_[1]; }
    const CurveS3& z() const noexcept { return components_[2]; }
    const CurveS3& component(int i) const { return components_.at(static_cast<std::size_t>(i)); }

    /// Smallest sampled chordal distance between two distinct components.
    double separation() const noexcept { return separation_; }

private:
    std::array<CurveS3, 3> components_;
    double separation_ = 0.0;
};

/// Closed curve in R^3 given by position and velocity over [0, 2pi).
struct SpaceCurve {
    std::function<Vec3(double)> position;
    std::function<Vec3(double)> velocity;
};

/// Image of a curve under stereo_from_pole(pole, .); the pole must stay off the curve.
SpaceCurve stereographic_image(const CurveS3& curve, const Quat& pole = Quat::one());

/// Minimum chordal distance between two curves over `n` samples each.
double sampled_distance(const CurveS3& a, const CurveS3& b, int n);

}  // namespace linkhel
