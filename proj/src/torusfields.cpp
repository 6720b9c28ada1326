#include "linkhel/torusfields.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <numbers>
#include <ostream>
#include <string>

#include "linkhel/errors.hpp"
#include "linkhel/parallel.hpp"

namespace linkhel {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kTorusVolume = 8.0 * kPi * kPi * kPi;

// The FFTW planner is not re-entrant; execution of distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

class FftPlan {
public:
    FftPlan(std::span<cplx> data, int rank, int n, int sign) {
        auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
        std::lock_guard lock(planner_mutex());
        plan_ = rank == 3 ? fftw_plan_dft_3d(n, n, n, ptr, ptr, sign, FFTW_ESTIMATE)
                          : fftw_plan_dft_2d(n, n, ptr, ptr, sign, FFTW_ESTIMATE);
    }
    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;
    ~FftPlan() {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan_);
    }
    void execute() const { fftw_execute(plan_); }

private:
    fftw_plan plan_ = nullptr;
};

void fft_in_place(std::span<cplx> data, int rank, int n, int sign) {
    FftPlan plan(data, rank, n, sign);
    plan.execute();
}

int wave_number(int j, int n) { return j < n / 2 ? j : j - n; }

// Wave number as seen by first-derivative multipliers.
double odd_wave(int j, int n) {
    const int k = wave_number(j, n);
    return k == -n / 2 ? 0.0 : static_cast<double>(k);
}

void require_same_grid(const VectorField3& v) {
    if (v.comp[1].n() != v.comp[0].n() || v.comp[2].n() != v.comp[0].n()) {
        throw InvalidArgument("vector field components live on different grids");
    }
}

// Applies body(slot, wave_s, wave_t, wave_u) to every coefficient slot.
template <class Body>
void for_each_mode(int n, Body&& body) {
    parallel_for(0, n, [&](int lo, int hi) {
        for (int c = lo; c < hi; ++c) {
            for (int b = 0; b < n; ++b) {
                for (int a = 0; a < n; ++a) {
                    const std::size_t slot = static_cast<std::size_t>(a) +
                                             static_cast<std::size_t>(n) * (b + static_cast<std::size_t>(n) * c);
                    body(slot, a, b, c);
                }
            }
        }
    });
}

struct Spectral3 {
    std::array<SpectralField3, 3> comp;
};

Spectral3 forward(const VectorField3& v) {
    require_same_grid(v);
    return {{dft_forward(v.comp[0]), dft_forward(v.comp[1]), dft_forward(v.comp[2])}};
}

VectorField3 inverse(const Spectral3& s) {
    return {dft_inverse(s.comp[0]), dft_inverse(s.comp[1]), dft_inverse(s.comp[2])};
}

// out(k) = i k~ x in(k) * weight(|k|^2)
template <class Weight>
Spectral3 cross_multiplier(const Spectral3& in, Weight&& weight) {
    const int n = in.comp[0].n();
    Spectral3 out{{SpectralField3(n), SpectralField3(n), SpectralField3(n)}};
    const cplx I{0.0, 1.0};
    for_each_mode(n, [&](std::size_t slot, int a, int b, int c) {
        const double ks = odd_wave(a, n), kt = odd_wave(b, n), ku = odd_wave(c, n);
        const double ls = wave_number(a, n), lt = wave_number(b, n), lu = wave_number(c, n);
        const double w = weight(ls * ls + lt * lt + lu * lu);
        const cplx vs = in.comp[0].data()[slot], vt = in.comp[1].data()[slot], vu = in.comp[2].data()[slot];
        out.comp[0].data()[slot] = I * w * (kt * vu - ku * vt);
        out.comp[1].data()[slot] = I * w * (ku * vs - ks * vu);
        out.comp[2].data()[slot] = I * w * (ks * vt - kt * vs);
    });
    return out;
}

double inverse_square(double k2) { return k2 > 0.0 ? 1.0 / k2 : 0.0; }

// 1D table of e^{i l x} for l = -m..m, offset by m.
std::vector<cplx> exp_table(double x, int m) {
    std::vector<cplx> out(static_cast<std::size_t>(2 * m + 1));
    for (int l = -m; l <= m; ++l) out[static_cast<std::size_t>(l + m)] = std::polar(1.0, l * x);
    return out;
}

void require_truncation(int m) {
    if (m < 1) throw InvalidArgument("series truncation must be at least 1");
}

}  // namespace

ScalarField3::ScalarField3(int n) : ScalarField3(n, std::vector<double>(static_cast<std::size_t>(n) * n * n, 0.0)) {}

ScalarField3::ScalarField3(int n, std::vector<double> data) : n_(n), data_(std::move(data)) {
    if (n < 8 || n % 2 != 0) {
        throw InvalidArgument("grid size must be even and at least 8, got " + std::to_string(n));
    }
    if (data_.size() != static_cast<std::size_t>(n) * n * n) {
        throw InvalidArgument("field data does not match an n^3 grid");
    }
}

double ScalarField3::node(int a) const noexcept { return kTwoPi * a / n_; }

double ScalarField3::mean() const { return pairwise_sum(data_) / static_cast<double>(data_.size()); }

VectorField3::VectorField3(ScalarField3 s, ScalarField3 t, ScalarField3 u) : comp{std::move(s), std::move(t), std::move(u)} {
    require_same_grid(*this);
}

VectorField3 VectorField3::scaled(double factor) const {
    VectorField3 out = *this;
    for (auto& c : out.comp) {
        for (auto& x : c.data()) x *= factor;
    }
    return out;
}

VectorField3 VectorField3::operator-(const VectorField3& other) const {
    VectorField3 out = *this;
    for (int d = 0; d < 3; ++d) {
        for (std::size_t i = 0; i < out.comp[d].size(); ++i) out.comp[d][i] -= other.comp[d][i];
    }
    return out;
}

SpectralField3::SpectralField3(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n) {}

std::size_t SpectralField3::slot(int l, int m, int k) const noexcept {
    const auto wrap = [this](int w) { return static_cast<std::size_t>(w < 0 ? w + n_ : w); };
    return wrap(l) + static_cast<std::size_t>(n_) * (wrap(m) + static_cast<std::size_t>(n_) * wrap(k));
}

SpectralField3 dft_forward(const ScalarField3& f) {
    const int n = f.n();
    SpectralField3 out(n);
    auto data = out.data();
    for (std::size_t i = 0; i < data.size(); ++i) data[i] = f[i];
    fft_in_place(data, 3, n, FFTW_FORWARD);
    const double scale = 1.0 / static_cast<double>(data.size());
    for (auto& c : data) c *= scale;
    return out;
}

ScalarField3 dft_inverse(const SpectralField3& f) {
    const int n = f.n();
    std::vector<cplx> work(f.data().begin(), f.data().end());
    fft_in_place(work, 3, n, FFTW_BACKWARD);
    std::vector<double> real(work.size());
    for (std::size_t i = 0; i < work.size(); ++i) real[i] = work[i].real();
    return ScalarField3(n, std::move(real));
}

ScalarField3 partial(const ScalarField3& f, int axis) {
    if (axis < 0 || axis > 2) throw InvalidArgument("axis must be 0, 1 or 2");
    const int n = f.n();
    SpectralField3 spec = dft_forward(f);
    auto data = spec.data();
    for_each_mode(n, [&](std::size_t slot, int a, int b, int c) {
        const int j = axis == 0 ? a : (axis == 1 ? b : c);
        data[slot] *= cplx{0.0, odd_wave(j, n)};
    });
    return dft_inverse(spec);
}

VectorField3 gradient(const ScalarField3& f) {
    const int n = f.n();
    const SpectralField3 spec = dft_forward(f);
    Spectral3 out{{SpectralField3(n), SpectralField3(n), SpectralField3(n)}};
    for_each_mode(n, [&](std::size_t slot, int a, int b, int c) {
        const cplx v = spec.data()[slot];
        out.comp[0].data()[slot] = cplx{0.0, odd_wave(a, n)} * v;
        out.comp[1].data()[slot] = cplx{0.0, odd_wave(b, n)} * v;
        out.comp[2].data()[slot] = cplx{0.0, odd_wave(c, n)} * v;
    });
    return inverse(out);
}

ScalarField3 divergence(const VectorField3& v) {
    const int n = v.n();
    const Spectral3 in = forward(v);
    SpectralField3 out(n);
    for_each_mode(n, [&](std::size_t slot, int a, int b, int c) {
        out.data()[slot] = cplx{0.0, 1.0} * (odd_wave(a, n) * in.comp[0].data()[slot] +
                                             odd_wave(b, n) * in.comp[1].data()[slot] +
                                             odd_wave(c, n) * in.comp[2].data()[slot]);
    });
    return dft_inverse(out);
}

VectorField3 curl(const VectorField3& v) {
    return inverse(cross_multiplier(forward(v), [](double) { return 1.0; }));
}

ScalarField3 laplacian(const ScalarField3& f) {
    const int n = f.n();
    SpectralField3 spec = dft_forward(f);
    auto data = spec.data();
    for_each_mode(n, [&](std::size_t slot, int a, int b, int c) {
        const double ks = wave_number(a, n), kt = wave_number(b, n), ku = wave_number(c, n);
        data[slot] *= -(ks * ks + kt * kt + ku * ku);
    });
    return dft_inverse(spec);
}

VectorField3 laplacian(const VectorField3& v) {
    return {laplacian(v.comp[0]), laplacian(v.comp[1]), laplacian(v.comp[2])};
}

ScalarField3 green(const ScalarField3& f) {
    const int n = f.n();
    SpectralField3 spec = dft_forward(f);
    auto data = spec.data();
    for_each_mode(n, [&](std::size_t slot, int a, int b, int c) {
        const double ks = wave_number(a, n), kt = wave_number(b, n), ku = wave_number(c, n);
        data[slot] *= -inverse_square(ks * ks + kt * kt + ku * ku);
    });
    return dft_inverse(spec);
}

VectorField3 green(const VectorField3& v) { return {green(v.comp[0]), green(v.comp[1]), green(v.comp[2])}; }

VectorField3 biot_savart(const VectorField3& v) { return inverse(cross_multiplier(forward(v), inverse_square)); }

double helicity(const VectorField3& v) {
    const VectorField3 bs = biot_savart(v);
    const std::size_t count = v.comp[0].size();
    std::vector<double> density(count);
    parallel_for(0, static_cast<int>(count), [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) density[static_cast<std::size_t>(i)] = dot(bs.at(static_cast<std::size_t>(i)), v.at(static_cast<std::size_t>(i)));
    });
    const double h = kTwoPi / v.n();
    return h * h * h * pairwise_sum(density);
}

double helicity_spectral(const VectorField3& v) {
    const Spectral3 in = forward(v);
    const Spectral3 bs = cross_multiplier(in, inverse_square);
    const std::size_t count = in.comp[0].data().size();
    std::vector<double> terms(count);
    for (std::size_t i = 0; i < count; ++i) {
        cplx acc{};
        for (int d = 0; d < 3; ++d) acc += std::conj(in.comp[d].data()[i]) * bs.comp[d].data()[i];
        terms[i] = acc.real();
    }
    return kTorusVolume * pairwise_sum(terms);
}

BruteforceHelicity helicity_bruteforce(const VectorField3& v, int truncation) {
    require_same_grid(v);
    const int n = v.n();
    if (n > kBruteforceMaxGrid) {
        throw GridTooLarge("double-integral helicity is limited to grids of size <= " +
                           std::to_string(kBruteforceMaxGrid) + ", got " + std::to_string(n));
    }
    require_truncation(truncation);
    if (truncation > n / 2 - 1) {
        throw InvalidArgument("series truncation must not exceed n/2 - 1 = " + std::to_string(n / 2 - 1));
    }
    const ScalarField3& grid = v.comp[0];
    const std::size_t count = grid.size();

    // Differences of nodes are nodes, so grad phi is tabulated once per offset.
    std::vector<Vec3> kernel(count);
    parallel_for(0, n, [&](int lo, int hi) {
        for (int c = lo; c < hi; ++c) {
            for (int b = 0; b < n; ++b) {
                for (int a = 0; a < n; ++a) {
                    kernel[grid.index(a, b, c)] = phi_gradient({grid.node(a), grid.node(b), grid.node(c)}, truncation);
                }
            }
        }
    });

    std::vector<Vec3> field(count);
    for (std::size_t i = 0; i < count; ++i) field[i] = v.at(i);

    std::vector<double> rows(count);
    parallel_for(0, static_cast<int>(count), [&](int lo, int hi) {
        std::vector<double> terms(count);
        for (int i = lo; i < hi; ++i) {
            const int sa = i % n, sb = (i / n) % n, sc = i / (n * n);
            const Vec3& vs = field[static_cast<std::size_t>(i)];
            for (int c = 0; c < n; ++c) {
                for (int b = 0; b < n; ++b) {
                    for (int a = 0; a < n; ++a) {
                        const std::size_t j = grid.index(a, b, c);
                        const std::size_t d = grid.index((sa - a + n) % n, (sb - b + n) % n, (sc - c + n) % n);
                        terms[j] = triple(kernel[d], vs, field[j]);
                    }
                }
            }
            rows[static_cast<std::size_t>(i)] = pairwise_sum(terms);
        }
    });
    const double h = kTwoPi / n;
    const double h3 = h * h * h;

    BruteforceHelicity out;
    out.truncation = truncation;
    out.value = h3 * h3 * pairwise_sum(rows);

    // Triangle inequality over the coefficient-space terms the truncation omits.
    const Spectral3 spec = forward(v);
    const Spectral3 bs = cross_multiplier(spec, inverse_square);
    std::vector<double> omitted(count, 0.0);
    for_each_mode(n, [&](std::size_t slot, int a, int b, int c) {
        const int ls = wave_number(a, n), lt = wave_number(b, n), lu = wave_number(c, n);
        if (std::max({std::abs(ls), std::abs(lt), std::abs(lu)}) <= truncation) return;
        cplx term{};
        for (int d = 0; d < 3; ++d) term += std::conj(spec.comp[d].data()[slot]) * bs.comp[d].data()[slot];
        omitted[slot] = std::abs(term.real());
    });
    out.truncation_bound = kTorusVolume * pairwise_sum(omitted);
    return out;
}

std::complex<double> phi_series(const Vec3& point, int truncation) {
    require_truncation(truncation);
    const int m = truncation;
    const auto ex = exp_table(point.x, m), ey = exp_table(point.y, m), ez = exp_table(point.z, m);
    cplx sum{};
    for (int k = -m; k <= m; ++k) {
        for (int j = -m; j <= m; ++j) {
            for (int l = -m; l <= m; ++l) {
                const int k2 = l * l + j * j + k * k;
                if (k2 == 0) continue;
                sum += ex[l + m] * ey[j + m] * ez[k + m] / static_cast<double>(k2);
            }
        }
    }
    return -sum / kTorusVolume;
}

double phi_eval(const Vec3& point, int truncation) { return phi_series(point, truncation).real(); }

Vec3 phi_gradient(const Vec3& point, int truncation) {
    require_truncation(truncation);
    const int m = truncation;
    const auto ex = exp_table(point.x, m), ey = exp_table(point.y, m), ez = exp_table(point.z, m);
    Vec3 sum;
    for (int k = -m; k <= m; ++k) {
        for (int j = -m; j <= m; ++j) {
            for (int l = -m; l <= m; ++l) {
                const int k2 = l * l + j * j + k * k;
                if (k2 == 0) continue;
                // Real part of -i k e^{i k.x}: k sin(k.x).
                const double s = (ex[l + m] * ey[j + m] * ez[k + m]).imag() / k2;
                sum += Vec3{static_cast<double>(l), static_cast<double>(j), static_cast<double>(k)} * s;
            }
        }
    }
    return sum / kTorusVolume;
}

double phi2_eval(double x, double y, int truncation) {
    require_truncation(truncation);
    const int m = truncation;
    const auto ex = exp_table(x, m), ey = exp_table(y, m);
    cplx sum{};
    for (int j = -m; j <= m; ++j) {
        for (int l = -m; l <= m; ++l) {
            const int k2 = l * l + j * j;
            if (k2 == 0) continue;
            sum += ex[l + m] * ey[j + m] / static_cast<double>(k2);
        }
    }
    return -sum.real() / (4.0 * kPi * kPi);
}

std::array<std::vector<double>, 2> planar_partials(std::span<const double> f, int n) {
    if (f.size() != static_cast<std::size_t>(n) * n) throw InvalidArgument("planar grid does not match n^2");
    std::vector<cplx> spec(f.begin(), f.end());
    fft_in_place(spec, 2, n, FFTW_FORWARD);
    std::array<std::vector<double>, 2> out;
    for (int axis = 0; axis < 2; ++axis) {
        std::vector<cplx> work(spec.size());
        for (int b = 0; b < n; ++b) {
            for (int a = 0; a < n; ++a) {
                const std::size_t i = static_cast<std::size_t>(a) + static_cast<std::size_t>(n) * b;
                work[i] = cplx{0.0, odd_wave(axis == 0 ? a : b, n)} * spec[i];
            }
        }
        fft_in_place(work, 2, n, FFTW_BACKWARD);
        const double scale = 1.0 / static_cast<double>(work.size());
        out[axis].resize(work.size());
        for (std::size_t i = 0; i < work.size(); ++i) out[axis][i] = work[i].real() * scale;
    }
    return out;
}

void write_csv(std::ostream& out, const VectorField3& v) {
    require_same_grid(v);
    const ScalarField3& g = v.comp[0];
    const int n = g.n();
    out << "s,t,u,vs,vt,vu\n";
    char line[256];
    for (int c = 0; c < n; ++c) {
        for (int b = 0; b < n; ++b) {
            for (int a = 0; a < n; ++a) {
                const std::size_t i = g.index(a, b, c);
                std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", g.node(a), g.node(b),
                              g.node(c), v.comp[0][i], v.comp[1][i], v.comp[2][i]);
                out << line;
            }
        }
    }
}

}  // namespace linkhel
