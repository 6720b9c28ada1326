#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

#include "linkhel/quat.hpp"

namespace linkhel {

/// Largest grid accepted by the O(N^6) double-integral helicity.
inline constexpr int kBruteforceMaxGrid = 12;

/// Real samples on the uniform n^3 grid of the flat torus [0, 2pi)^3.
///
/// Node (a, b, c) sits at (2 pi a / n, 2 pi b / n, 2 pi c / n); the axes are
/// named s, t, u in that order and storage is s-fastest: a + n (b + n c).
class ScalarField3 {
public:
    ScalarField3() = default;
    /// Zero field; n must be even and at least 8.
    explicit ScalarField3(int n);
    ScalarField3(int n, std::vector<double> data);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return data_.size(); }
    std::size_t index(int a, int b, int c) const noexcept {
        return static_cast<std::size_t>(a) + static_cast<std::size_t>(n_) *
                                                 (static_cast<std::size_t>(b) + static_cast<std::size_t>(n_) * c);
    }
    double& operator()(int a, int b, int c) noexcept { return data_[index(a, b, c)]; }
    double operator()(int a, int b, int c) const noexcept { return data_[index(a, b, c)]; }
    double& operator[](std::size_t i) noexcept { return data_[i]; }
    double operator[](std::size_t i) const noexcept { return data_[i]; }
    std::span<double> data() noexcept { return data_; }
    std::span<const double> data() const noexcept { return data_; }

    /// Coordinate of grid index a along any axis.
    double node(int a) const noexcept;

    double mean() const;

private:
    int n_ = 0;
    std::vector<double> data_;
};

/// Vector field with components along d/ds, d/dt, d/du.
struct VectorField3 {
    std::array<ScalarField3, 3> comp;

    VectorField3() = default;
    explicit VectorField3(int n) : comp{ScalarField3(n), ScalarField3(n), ScalarField3(n)} {}
    VectorField3(ScalarField3 s, ScalarField3 t, ScalarField3 u);

    int n() const noexcept { return comp[0].n(); }
    Vec3 at(std::size_t i) const { return {comp[0][i], comp[1][i], comp[2][i]}; }
    void set(std::size_t i, const Vec3& v) {
        comp[0][i] = v.x;
        comp[1][i] = v.y;
        comp[2][i] = v.z;
    }
    Vec3 mean() const { return {comp[0].mean(), comp[1].mean(), comp[2].mean()}; }

    VectorField3 scaled(double factor) const;
    VectorField3 operator-(const VectorField3& other) const;
};

/// Fourier coefficients of a grid field, normalized so that coeff(0,0,0) is the mean:
/// f(x) = sum_k coeff(k) e^{i k . x}, with wave numbers in [-n/2, n/2) per axis.
class SpectralField3 {
public:
    using cplx = std::complex<double>;

    SpectralField3() = default;
    explicit SpectralField3(int n);

    int n() const noexcept { return n_; }
    cplx& coeff(int l, int m, int k) noexcept { return data_[slot(l, m, k)]; }
    cplx coeff(int l, int m, int k) const noexcept { return data_[slot(l, m, k)]; }
    std::span<cplx> data() noexcept { return data_; }
    std::span<const cplx> data() const noexcept { return data_; }

    /// Wave number stored at FFT index j.
    int wave(int j) const noexcept { return j < n_ / 2 ? j : j - n_; }
    std::size_t slot(int l, int m, int k) const noexcept;

private:
    int n_ = 0;
    std::vector<cplx> data_;
};

SpectralField3 dft_forward(const ScalarField3& f);
/// Inverse transform; the imaginary part of the synthesis is discarded.
ScalarField3 dft_inverse(const SpectralField3& f);

// Spectral differential operators. First-derivative multipliers i k use k = 0 for
// the Nyquist wave number -n/2, so odd derivatives of real fields stay real.

ScalarField3 partial(const ScalarField3& f, int axis);
VectorField3 gradient(const ScalarField3& f);
ScalarField3 divergence(const VectorField3& v);
VectorField3 curl(const VectorField3& v);
ScalarField3 laplacian(const ScalarField3& f);
VectorField3 laplacian(const VectorField3& v);

/// Convolution with the fundamental solution: multiplier -1/|k|^2, mean removed.
ScalarField3 green(const ScalarField3& f);
VectorField3 green(const VectorField3& v);

/// -curl(green(V)), i.e. multiplier i k x V(k) / |k|^2 with the zero mode dropped.
VectorField3 biot_savart(const VectorField3& v);

/// Integral over T^3 of biot_savart(V) . V, by the periodic trapezoidal rule.
double helicity(const VectorField3& v);
/// Same quantity summed in coefficient space: 8 pi^3 sum_k conj(V(k)) . (i k x V(k)) / |k|^2.
double helicity_spectral(const VectorField3& v);

struct BruteforceHelicity {
    double value = 0.0;
    /// Sum of |term| over the coefficient-space helicity terms outside the truncation
    /// cube; bounds |helicity(V) - value|.
    double truncation_bound = 0.0;
    int truncation = 0;
};

/// Direct double Riemann sum of V(a) x V(b) . grad phi_M(a - b) over all node pairs,
/// with grad phi_M from the truncated series. Throws GridTooLarge for n > 12.
BruteforceHelicity helicity_bruteforce(const VectorField3& v, int truncation);

/// Partial sum of the fundamental solution series over 0 < max(|l|,|m|,|n|) <= M,
/// before discarding the (round-off sized) imaginary part.
std::complex<double> phi_series(const Vec3& point, int truncation);
double phi_eval(const Vec3& point, int truncation);
/// Term-by-term gradient of the truncated series.
Vec3 phi_gradient(const Vec3& point, int truncation);
/// 2-torus analog: -(1/4 pi^2) sum e^{i(l x + m y)} / (l^2 + m^2) over the square.
double phi2_eval(double x, double y, int truncation);

/// Spectral partial derivatives of an n x n periodic grid (index a + n b) along a and b.
std::array<std::vector<double>, 2> planar_partials(std::span<const double> f, int n);

/// CSV with header s,t,u,vs,vt,vu, one row per node, s fastest.
void write_csv(std::ostream& out, const VectorField3& v);

}  // namespace linkhel
