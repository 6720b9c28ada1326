#include "linkhel/catalog.hpp"

#include <cmath>
#include <numbers>

#include "linkhel/errors.hpp"

namespace linkhel {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kSamplesPerComponent = 64;

template <class Point, class Fn>
std::vector<Point> sample_curve(Fn&& fn) {
    std::vector<Point> out;
    out.reserve(kSamplesPerComponent);
    for (int j = 0; j < kSamplesPerComponent; ++j) out.push_back(fn(kTwoPi * j / kSamplesPerComponent));
    return out;
}

// Round circle of chordal-ish radius sin(rho) around `center`, in the plane (a, b).
CurveS3 round_circle(const Quat& center, const Quat& a, const Quat& b, double radius) {
    const double rho = std::asin(radius);
    const auto pts = sample_curve<Quat>([&](double s) {
        return std::cos(rho) * center + std::sin(rho) * (std::cos(s) * a + std::sin(s) * b);
    });
    return CurveS3::from_samples(pts);
}

// Pairwise linking number between old components i and j of (p, q, r).
int pair_linking(const ExpectedInvariants& e, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == 1 && j == 2) return e.p;
    if (i == 0 && j == 2) return e.q;
    return e.r;
}

}  // namespace

CatalogEntry borromean() {
    constexpr double major = 1.0, minor = 0.4;
    const auto xy = sample_curve<Vec3>([](double s) { return Vec3{major * std::cos(s), minor * std::sin(s), 0.0}; });
    const auto yz = sample_curve<Vec3>([](double s) { return Vec3{0.0, major * std::cos(s), minor * std::sin(s)}; });
    const auto zx = sample_curve<Vec3>([](double s) { return Vec3{minor * std::sin(s), 0.0, major * std::cos(s)}; });
    return {"borromean",
            Link3(CurveS3::from_samples(xy), CurveS3::from_samples(yz), CurveS3::from_samples(zx)),
            ExpectedInvariants{0, 0, 0, 1.0, "Borromean rings: pairwise unlinked, triple linking number +-1"},
            kSamplesPerComponent};
}

CatalogEntry unlink() {
    constexpr double radius = 0.3;
    return {"unlink",
            Link3(round_circle(Quat::one(), Quat::i(), Quat::j(), radius),
                  round_circle(Quat::i(), Quat::j(), Quat::k(), radius),
                  round_circle(Quat::k(), Quat::one(), Quat::i(), radius)),
            ExpectedInvariants{0, 0, 0, 0.0, "split link: every invariant vanishes"},
            kSamplesPerComponent};
}

CatalogEntry hopf_pair_plus_unknot() {
    const auto x = sample_curve<Quat>([](double s) { return Quat{std::cos(s), std::sin(s), 0.0, 0.0}; });
    const auto y = sample_curve<Quat>([](double t) { return Quat{0.0, 0.0, std::cos(t), std::sin(t)}; });
    const double h = std::numbers::sqrt2 / 2.0;
    // Centered on the Clifford torus, as far as possible from both great circles.
    const CurveS3 z = round_circle(Quat{h, 0.0, h, 0.0}, Quat::i(), Quat::k(), 0.2);
    return {"hopf_pair_plus_unknot",
            Link3(CurveS3::from_samples(x), CurveS3::from_samples(y), z),
            ExpectedInvariants{0, 0, -1, std::nullopt,
                               "Hopf link X, Y plus a split unknot Z; sign of lk(X,Y) is a regression value"},
            kSamplesPerComponent};
}

std::vector<std::string> catalog_names() { return {"borromean", "unlink", "hopf_pair_plus_unknot"}; }

CatalogEntry catalog_entry(const std::string& name) {
    if (name == "borromean") return borromean();
    if (name == "unlink") return unlink();
    if (name == "hopf_pair_plus_unknot") return hopf_pair_plus_unknot();
    throw InvalidArgument("unknown catalog entry '" + name + "'");
}

CatalogEntry mirror(const CatalogEntry& e) {
    constexpr int kMirrorCoordinate = 3;
    std::optional<ExpectedInvariants> expected = e.expected;
    if (expected) {
        expected->p = -expected->p;
        expected->q = -expected->q;
        expected->r = -expected->r;
    }
    return {"mirror(" + e.name + ")",
            Link3(e.link.x().reflected(kMirrorCoordinate), e.link.y().reflected(kMirrorCoordinate),
                  e.link.z().reflected(kMirrorCoordinate)),
            expected, e.samples};
}

CatalogEntry permute(const CatalogEntry& e, std::array<int, 3> order) {
    std::array<bool, 3> seen{};
    for (int i : order) {
        if (i < 0 || i > 2 || seen[static_cast<std::size_t>(i)]) {
            throw InvalidArgument("permutation must list 0, 1 and 2 exactly once");
        }
        seen[static_cast<std::size_t>(i)] = true;
    }
    std::optional<ExpectedInvariants> expected = e.expected;
    if (expected) {
        const ExpectedInvariants& old = *e.expected;
        expected->p = pair_linking(old, order[1], order[2]);
        expected->q = pair_linking(old, order[0], order[2]);
        expected->r = pair_linking(old, order[0], order[1]);
    }
    return {"permute(" + e.name + "," + std::to_string(order[0]) + "," + std::to_string(order[1]) + "," +
                std::to_string(order[2]) + ")",
            Link3(e.link.component(order[0]), e.link.component(order[1]), e.link.component(order[2])), expected,
            e.samples};
}

CatalogEntry reverse_component(const CatalogEntry& e, int which) {
    if (which < 0 || which > 2) throw InvalidArgument("component index must be 0, 1 or 2");
    std::array<CurveS3, 3> parts{e.link.x(), e.link.y(), e.link.z()};
    parts[static_cast<std::size_t>(which)] = parts[static_cast<std::size_t>(which)].reversed();
    std::optional<ExpectedInvariants> expected = e.expected;
    if (expected) {
        // The two linking numbers involving `which` change sign.
        if (which != 0) expected->p = -expected->p;
        if (which != 1) expected->q = -expected->q;
        if (which != 2) expected->r = -expected->r;
    }
    return {"reverse(" + e.name + "," + std::to_string(which) + ")", Link3(parts[0], parts[1], parts[2]), expected,
            e.samples};
}

}  // namespace linkhel
