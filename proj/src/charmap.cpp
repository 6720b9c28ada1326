#include "linkhel/charmap.hpp"

#include <string>

#include "linkhel/errors.hpp"
#include "linkhel/parallel.hpp"

namespace linkhel {

namespace {

Vec3 pair_term(const Quat& a, const Quat& b) {
    return {dot(a, Quat::i() * b), dot(a, Quat::j() * b), dot(a, Quat::k() * b)};
}

std::vector<Vec3> pair_table(const std::vector<Quat>& first, const std::vector<Quat>& second) {
    const std::size_t n = first.size();
    std::vector<Vec3> out(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) out[a + n * b] = pair_term(first[a], second[b]);
    }
    return out;
}

[[noreturn]] void degenerate(double s, double t, double u, double value) {
    throw NearDegenerateTriple("||F|| = " + std::to_string(value) + " at (s, t, u) = (" + std::to_string(s) + ", " +
                               std::to_string(t) + ", " + std::to_string(u) + "): components nearly touch");
}

}  // namespace

Vec3 grassmann_F(const TriplePoint& p) { return pair_term(p.x, p.y) + pair_term(p.y, p.z) + pair_term(p.z, p.x); }

Vec3 g_map(const Link3& link, double s, double t, double u) {
    const Vec3 f = grassmann_F({link.x().eval(s), link.y().eval(t), link.z().eval(u)});
    const double len = norm(f);
    if (len < kMinGrassmannNorm) degenerate(s, t, u, len);
    return f / len;
}

Vec3 g_async(const Link3& link, double s, double t, double u) {
    const Quat xbar = quat_conj(link.x().eval(s));
    const Vec3 d = stereo_from_pole(Quat::one(), link.y().eval(t) * xbar) -
                   stereo_from_pole(Quat::one(), link.z().eval(u) * xbar);
    const double len = norm(d);
    if (len < kMinGrassmannNorm) degenerate(s, t, u, len);
    return d / len;
}

VectorField3 sample_F(const Link3& link, int n) {
    VectorField3 out(n);
    const auto xs = link.x().sample(n), ys = link.y().sample(n), zs = link.z().sample(n);
    // F(s,t,u) = A(s,t) + B(t,u) + C(u,s) with each term bilinear in two curves.
    const auto xy = pair_table(xs, ys), yz = pair_table(ys, zs), zx = pair_table(zs, xs);
    const std::size_t m = static_cast<std::size_t>(n);
    parallel_for(0, n, [&](int lo, int hi) {
        for (int c = lo; c < hi; ++c) {
            for (int b = 0; b < n; ++b) {
                for (int a = 0; a < n; ++a) {
                    out.set(out.comp[0].index(a, b, c), xy[a + m * b] + yz[b + m * c] + zx[c + m * a]);
                }
            }
        }
    });
    return out;
}

VectorField3 sample_VL(const Link3& link, int n) {
    const VectorField3 f = sample_F(link, n);
    // d[i][axis]: partial of F component i along axis.
    const std::array<VectorField3, 3> d{gradient(f.comp[0]), gradient(f.comp[1]), gradient(f.comp[2])};
    const auto partial = [&d](std::size_t node, int axis) {
        return Vec3{d[0].comp[axis][node], d[1].comp[axis][node], d[2].comp[axis][node]};
    };
    VectorField3 out(n);
    const ScalarField3& grid = f.comp[0];
    parallel_for(0, n, [&](int lo, int hi) {
        for (int c = lo; c < hi; ++c) {
            for (int b = 0; b < n; ++b) {
                for (int a = 0; a < n; ++a) {
                    const std::size_t i = grid.index(a, b, c);
                    const Vec3 value = f.at(i);
                    const double len = norm(value);
                    if (len < kMinGrassmannNorm) degenerate(grid.node(a), grid.node(b), grid.node(c), len);
                    const Vec3 fs = partial(i, 0), ft = partial(i, 1), fu = partial(i, 2);
                    const double scale = NormalizationConvention::area_scale / (len * len * len);
                    out.set(i, Vec3{triple(value, ft, fu), triple(value, fu, fs), triple(value, fs, ft)} * scale);
                }
            }
        }
    });
    return out;
}

}  // namespace linkhel
