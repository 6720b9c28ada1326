#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>

#include "json.hpp"
#include "linkhel/catalog.hpp"
#include "linkhel/errors.hpp"
#include "linkhel/invariants.hpp"
#include "linkhel/linkio.hpp"
#include "support.hpp"

using namespace linkhel;
using namespace testing;

namespace {

void check_same_curve(const CurveS3& a, const CurveS3& b) {
    CHECK(a.orientation() == b.orientation());
    REQUIRE(a.degree() == b.degree());
    for (int c = 0; c < 4; ++c) CHECK(a.poly().coeffs[c] == b.poly().coeffs[c]);
}

std::string parse_error(const std::string& text) {
    try {
        LinkDocument::parse(text).to_link();
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

std::string circle_samples_json(int count, double cx) {
    nlohmann::json pts = nlohmann::json::array();
    for (int j = 0; j < count; ++j) {
        const double s = kTwoPi * j / count;
        pts.push_back({cx + 0.2 * std::cos(s), 0.2 * std::sin(s), 0.0});
    }
    return pts.dump();
}

std::string r3_document(int count) {
    return R"({"format": "linkhel.link", "version": 1, "components": [)"
           R"({"space": "R3", "samples": )" + circle_samples_json(count, -1.0) + "},"
           R"({"space": "R3", "samples": )" + circle_samples_json(count, 0.0) + "},"
           R"({"space": "R3", "orientation": -1, "samples": )" + circle_samples_json(count, 1.0) + "}]}";
}

}  // namespace

TEST_CASE("catalog names") {
    const auto names = catalog_names();
    for (const char* want : {"borromean", "unlink", "hopf_pair_plus_unknot"}) {
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
        CHECK(catalog_entry(want).name == want);
    }
    CHECK_THROWS_AS(catalog_entry("trefoil"), InvalidArgument);
}

TEST_CASE("catalog geometry") {
    const CatalogEntry b = borromean();
    CHECK(b.samples == 64);
    CHECK(b.link.separation() >= 0.1);
    CHECK(std::min({sampled_distance(b.link.x(), b.link.y(), 2048), sampled_distance(b.link.x(), b.link.z(), 2048),
                    sampled_distance(b.link.y(), b.link.z(), 2048)}) >= 0.1);
    CHECK(unlink().link.separation() >= 0.5);
    for (const auto& name : catalog_names()) {
        const CatalogEntry e = catalog_entry(name);
        for (int i = 0; i < 3; ++i) CHECK(e.link.component(i).max_unit_deviation(4096) <= 1e-8);
    }
}

TEST_CASE("catalog annotations hold") {
    for (const auto& name : catalog_names()) {
        const CatalogEntry e = catalog_entry(name);
        REQUIRE(e.expected.has_value());
        CHECK_FALSE(e.expected->provenance.empty());
        const auto d = linking_degrees(e.link, 32);
        INFO(name);
        CHECK(d[0].degree == e.expected->p);
        CHECK(d[1].degree == e.expected->q);
        CHECK(d[2].degree == e.expected->r);
        if (e.expected->abs_mu) {
            const int n = name == "borromean" ? 64 : 32;
            const double tol = name == "borromean" ? 0.05 : 1e-3;
            CHECK(std::abs(std::abs(milnor_mu(e.link, n).mu) - *e.expected->abs_mu) <= tol);
        } else {
            CHECK_THROWS_AS(milnor_mu(e.link, 32), NonzeroLinking);
        }
    }
}

TEST_CASE("regression signs under the fixed conventions") {
    CHECK(milnor_mu(borromean().link, 64).mu == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(hopf_pair_plus_unknot().expected->r == -1);
}

TEST_CASE("mirror") {
    for (const auto& name : catalog_names()) {
        const CatalogEntry e = catalog_entry(name);
        const CatalogEntry twice = mirror(mirror(e));
        for (int i = 0; i < 3; ++i) {
            const auto a = e.link.component(i).sample(64), b = twice.link.component(i).sample(64);
            CHECK(a == b);
            const auto m = mirror(e).link.component(i).sample(64);
            for (std::size_t j = 0; j < a.size(); ++j) CHECK(m[j] == Quat{a[j].w, a[j].x, a[j].y, -a[j].z});
        }
    }
    const CatalogEntry h = mirror(hopf_pair_plus_unknot());
    CHECK(h.expected->r == 1);
    CHECK(linking_degrees(h.link, 32)[2].degree == 1);
}

TEST_CASE("permute") {
    const CatalogEntry h = hopf_pair_plus_unknot();
    for (const auto& order : {std::array<int, 3>{1, 2, 0}, std::array<int, 3>{2, 0, 1}, std::array<int, 3>{0, 2, 1},
                              std::array<int, 3>{1, 0, 2}, std::array<int, 3>{2, 1, 0}}) {
        const CatalogEntry p = permute(h, order);
        const auto d = linking_degrees(p.link, 32);
        INFO(p.name);
        CHECK(d[0].degree == p.expected->p);
        CHECK(d[1].degree == p.expected->q);
        CHECK(d[2].degree == p.expected->r);
        for (int i = 0; i < 3; ++i) check_same_curve(p.link.component(i), h.link.component(order[i]));
    }
    CHECK_THROWS_AS(permute(h, {0, 0, 1}), InvalidArgument);
    CHECK_THROWS_AS(permute(h, {0, 1, 3}), InvalidArgument);
}

TEST_CASE("reverse_component") {
    const CatalogEntry b = borromean();
    const CatalogEntry r = reverse_component(b, 1);
    CHECK(r.link.y().orientation() == -b.link.y().orientation());
    check_same_curve(r.link.x(), b.link.x());
    CHECK_THROWS_AS(reverse_component(b, 3), InvalidArgument);
}

TEST_CASE("link documents round trip exactly") {
    for (const auto& name : catalog_names()) {
        const CatalogEntry e = catalog_entry(name);
        const std::string text = LinkDocument::from_link(e.link, e.name).dump();
        const LinkDocument doc = LinkDocument::parse(text);
        CHECK(doc.name == name);
        CHECK(doc.dump() == text);
        const Link3 back = doc.to_link();
        for (int i = 0; i < 3; ++i) check_same_curve(back.component(i), e.link.component(i));
        if (name != "hopf_pair_plus_unknot") {
            const InvariantReport a = milnor_mu(e.link, 16), b = milnor_mu(back, 16);
            CHECK(a.mu == b.mu);
            CHECK(a.deg_raw == b.deg_raw);
            CHECK(report_to_json(a) == report_to_json(b));
        }
    }
    const CatalogEntry rev = reverse_component(borromean(), 2);
    const Link3 back = LinkDocument::parse(LinkDocument::from_link(rev.link, rev.name).dump()).to_link();
    CHECK(back.z().orientation() == -1);
}

TEST_CASE("sampled documents") {
    const Link3 link = LinkDocument::parse(r3_document(16)).to_link();
    CHECK(link.z().orientation() == -1);
    CHECK(max_abs_diff(link.x().eval(0.0), inverse_stereo({-0.8, 0.0, 0.0})) <= 1e-6);
    const auto d = linking_degrees(link, 16);
    for (const auto& r : d) CHECK(r.degree == 0);

    const std::string s3 = R"({"components": [
        {"space": "S3", "samples": [[1,0,0,0],[0.7071,0.7071,0,0],[0,1,0,0],[-0.7071,0.7071,0,0],[-1,0,0,0],[-0.7071,-0.7071,0,0],[0,-1,0,0],[0.7071,-0.7071,0,0]]},
        {"space": "S3", "samples": [[0,0,1,0],[0,0,0.7071,0.7071],[0,0,0,1],[0,0,-0.7071,0.7071],[0,0,-1,0],[0,0,-0.7071,-0.7071],[0,0,0,-1],[0,0,0.7071,-0.7071]]},
        {"space": "S3", "samples": [[0.6,0,0.6,0.1],[0.6,0.1,0.6,0],[0.6,0,0.6,-0.1],[0.6,-0.1,0.6,0],[0.6,0,0.6,0.1],[0.6,0.1,0.6,0],[0.6,0,0.6,-0.1],[0.6,-0.1,0.6,0]]}]})";
    CHECK_NOTHROW(LinkDocument::parse(s3).to_link());
}

TEST_CASE("parse errors carry a location") {
    CHECK(parse_error("{\"components\": [1, 2,").find("line") != std::string::npos);
    CHECK(parse_error("[]").find("$") != std::string::npos);
    CHECK(parse_error("{}").find("$: missing field 'components'") != std::string::npos);
    CHECK(parse_error(R"({"components": []})").find("$.components") != std::string::npos);
    CHECK(parse_error(R"({"format": "other", "components": []})").find("$.format") != std::string::npos);
    CHECK(parse_error(R"({"version": 2, "components": []})").find("$.version") != std::string::npos);

    CHECK(parse_error(r3_document(7)).find("$.components[0].samples: at least 8 samples") != std::string::npos);

    auto j = nlohmann::json::parse(r3_document(16));
    j["components"][1]["samples"][3] = {1.0, 2.0};
    CHECK(parse_error(j.dump()).find("$.components[1].samples[3]") != std::string::npos);
    j = nlohmann::json::parse(r3_document(16));
    j["components"][2]["samples"][5][1] = "x";
    CHECK(parse_error(j.dump()).find("$.components[2].samples[5][1]: expected a number") != std::string::npos);
    j = nlohmann::json::parse(r3_document(16));
    j["components"][0]["space"] = "R4";
    CHECK(parse_error(j.dump()).find("$.components[0].space") != std::string::npos);
    j = nlohmann::json::parse(r3_document(16));
    j["components"][0]["orientation"] = 2;
    CHECK(parse_error(j.dump()).find("$.components[0].orientation") != std::string::npos);
    j = nlohmann::json::parse(r3_document(16));
    j["components"][0]["coeffs"] = {{"degree", 0}};
    CHECK(parse_error(j.dump()).find("exactly one of") != std::string::npos);

    auto c = nlohmann::json::parse(LinkDocument::from_link(borromean().link, "b").dump());
    c["components"][1]["space"] = "R3";
    CHECK(parse_error(c.dump()).find("$.components[1].coeffs") != std::string::npos);
    c = nlohmann::json::parse(LinkDocument::from_link(borromean().link, "b").dump());
    c["components"][1]["coeffs"]["y"].erase(0);
    CHECK(parse_error(c.dump()).find("$.components[1].coeffs.y") != std::string::npos);
}

TEST_CASE("unusable geometry is not a parse error") {
    auto j = nlohmann::json::parse(r3_document(16));
    j["components"][1] = j["components"][0];
    CHECK_THROWS_AS(LinkDocument::parse(j.dump()).to_link(), ComponentsTooClose);
}

TEST_CASE("report documents") {
    const InvariantReport r = milnor_mu_checked(borromean().link, 32);
    const auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j["format"] == "linkhel.report");
    CHECK(j["status"] == "ok");
    CHECK(j["grid_n"] == 32);
    CHECK(j["mu"].get<double>() == r.mu);
    CHECK(j["nu"].get<double>() == r.nu);
    CHECK(j["linking"]["p"] == 0);
    CHECK(j["convergence"]["coarse_grid_n"] == 16);
    CHECK(j["convergence"]["converged"].is_boolean());
    CHECK(j["warnings"].is_array());

    const auto g = nlohmann::json::parse(refusal_to_json(0, 0, -1, 64));
    CHECK(g["status"] == "nonzero_linking");
    CHECK(g["linking"]["r"] == -1);
    CHECK(g["message"].get<std::string>().find("pairwise linking nonzero") != std::string::npos);

    const std::string text = report_to_text(r);
    CHECK(text.find("linking (p,q,r) (0, 0, 0)") != std::string::npos);
    CHECK(text.find("mu ") != std::string::npos);
}
