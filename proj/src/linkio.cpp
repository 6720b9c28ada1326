#include "linkhel/linkio.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "linkhel/errors.hpp"

namespace linkhel {

namespace {

using nlohmann::json;

constexpr const char* kLinkFormat = "linkhel.link";
constexpr const char* kReportFormat = "linkhel.report";
constexpr std::array<const char*, 4> kCoordNames{"w", "x", "y", "z"};

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ParseError(path + ": " + message);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing field '" + key + "'");
    return *it;
}

double number(const json& value, const std::string& path) {
    if (!value.is_number()) fail(path, "expected a number");
    return value.get<double>();
}

TrigPoly4 parse_coeffs(const json& node, const std::string& path) {
    if (!node.is_object()) fail(path, "expected an object");
    const json& degree = member(node, "degree", path);
    if (!degree.is_number_integer() || degree.get<int>() < 0) fail(path + ".degree", "expected a non-negative integer");
    TrigPoly4 poly;
    poly.degree = degree.get<int>();
    for (int c = 0; c < 4; ++c) {
        const std::string sub = path + "." + kCoordNames[c];
        const json& list = member(node, kCoordNames[c], path);
        if (!list.is_array() || static_cast<int>(list.size()) != poly.degree + 1) {
            fail(sub, "expected an array of degree + 1 = " + std::to_string(poly.degree + 1) + " [re, im] pairs");
        }
        for (std::size_t k = 0; k < list.size(); ++k) {
            const std::string at = sub + "[" + std::to_string(k) + "]";
            if (!list[k].is_array() || list[k].size() != 2) fail(at, "expected [re, im]");
            poly.coeffs[c].emplace_back(number(list[k][0], at + "[0]"), number(list[k][1], at + "[1]"));
        }
    }
    return poly;
}

ComponentDoc parse_component(const json& node, const std::string& path) {
    if (!node.is_object()) fail(path, "expected an object");
    ComponentDoc doc;
    const json& space = member(node, "space", path);
    if (!space.is_string() || (space != "S3" && space != "R3")) fail(path + ".space", "expected \"S3\" or \"R3\"");
    doc.space = space.get<std::string>();
    if (const auto it = node.find("orientation"); it != node.end()) {
        if (!it->is_number_integer() || (it->get<int>() != 1 && it->get<int>() != -1)) {
            fail(path + ".orientation", "expected +1 or -1");
        }
        doc.orientation = it->get<int>();
    }
    const bool has_samples = node.contains("samples");
    const bool has_coeffs = node.contains("coeffs");
    if (has_samples == has_coeffs) fail(path, "exactly one of 'samples' or 'coeffs' is required");
    if (has_coeffs) {
        if (doc.space != "S3") fail(path + ".coeffs", "coefficients are only accepted for S3 components");
        doc.coeffs = parse_coeffs(node["coeffs"], path + ".coeffs");
        return doc;
    }
    const json& samples = node["samples"];
    const std::string sub = path + ".samples";
    if (!samples.is_array()) fail(sub, "expected an array");
    if (samples.size() < 8) fail(sub, "at least 8 samples are required, got " + std::to_string(samples.size()));
    const std::size_t dim = doc.space == "S3" ? 4 : 3;
    for (std::size_t j = 0; j < samples.size(); ++j) {
        const std::string at = sub + "[" + std::to_string(j) + "]";
        if (!samples[j].is_array() || samples[j].size() != dim) {
            fail(at, "expected " + std::to_string(dim) + " numbers for space " + doc.space);
        }
        std::vector<double> point;
        for (std::size_t d = 0; d < dim; ++d) point.push_back(number(samples[j][d], at + "[" + std::to_string(d) + "]"));
        doc.samples.push_back(std::move(point));
    }
    return doc;
}

CurveS3 build_curve(const ComponentDoc& doc) {
    if (doc.coeffs) return CurveS3::from_coefficients(*doc.coeffs, doc.orientation);
    if (doc.space == "R3") {
        std::vector<Vec3> pts;
        for (const auto& p : doc.samples) pts.push_back({p[0], p[1], p[2]});
        return CurveS3::from_samples(std::span<const Vec3>(pts), doc.orientation);
    }
    std::vector<Quat> pts;
    for (const auto& p : doc.samples) pts.push_back({p[0], p[1], p[2], p[3]});
    return CurveS3::from_samples(std::span<const Quat>(pts), doc.orientation);
}

json triple_json(const std::array<double, 3>& v) { return json::array({v[0], v[1], v[2]}); }

}  // namespace

LinkDocument LinkDocument::parse(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) fail("$", "expected an object");
    LinkDocument doc;
    if (const auto it = root.find("format"); it != root.end() && *it != kLinkFormat) {
        fail("$.format", std::string("expected \"") + kLinkFormat + "\"");
    }
    if (const auto it = root.find("version"); it != root.end()) {
        if (!it->is_number_integer() || it->get<int>() != kLinkFormatVersion) {
            fail("$.version", "unsupported version (expected " + std::to_string(kLinkFormatVersion) + ")");
        }
    }
    if (const auto it = root.find("name"); it != root.end()) {
        if (!it->is_string()) fail("$.name", "expected a string");
        doc.name = it->get<std::string>();
    }
    const json& components = member(root, "components", "$");
    if (!components.is_array() || components.size() != 3) fail("$.components", "expected exactly three components");
    for (std::size_t i = 0; i < 3; ++i) {
        doc.components.push_back(parse_component(components[i], "$.components[" + std::to_string(i) + "]"));
    }
    return doc;
}

LinkDocument LinkDocument::from_link(const Link3& link, std::string name) {
    LinkDocument doc;
    doc.name = std::move(name);
    for (int i = 0; i < 3; ++i) {
        ComponentDoc c;
        c.orientation = link.component(i).orientation();
        c.coeffs = link.component(i).poly();
        doc.components.push_back(std::move(c));
    }
    return doc;
}

std::string LinkDocument::dump(int indent) const {
    json root;
    root["format"] = kLinkFormat;
    root["version"] = version;
    if (!name.empty()) root["name"] = name;
    json comps = json::array();
    for (const auto& c : components) {
        json node;
        node["space"] = c.space;
        node["orientation"] = c.orientation;
        if (c.coeffs) {
            json coeffs;
            coeffs["degree"] = c.coeffs->degree;
            for (int k = 0; k < 4; ++k) {
                json list = json::array();
                for (const auto& v : c.coeffs->coeffs[k]) list.push_back(json::array({v.real(), v.imag()}));
                coeffs[kCoordNames[k]] = std::move(list);
            }
            node["coeffs"] = std::move(coeffs);
        } else {
            node["samples"] = c.samples;
        }
        comps.push_back(std::move(node));
    }
    root["components"] = std::move(comps);
    return root.dump(indent) + "\n";
}

Link3 LinkDocument::to_link(double min_separation) const {
    if (components.size() != 3) throw ParseError("$.components: expected exactly three components");
    return Link3(build_curve(components[0]), build_curve(components[1]), build_curve(components[2]), min_separation);
}

std::string report_to_json(const InvariantReport& report, int indent) {
    json root;
    root["format"] = kReportFormat;
    root["version"] = kReportFormatVersion;
    root["status"] = "ok";
    root["grid_n"] = report.grid_n;
    root["linking"] = {{"p", report.p},
                       {"q", report.q},
                       {"r", report.r},
                       {"raw", triple_json(report.deg_raw)},
                       {"residuals", triple_json(report.deg_residuals)}};
    root["nu"] = report.nu;
    root["nu_spectral"] = report.nu_spectral;
    root["mu"] = report.mu;
    root["mu_residual"] = report.mu_residual;
    root["flux"] = triple_json(report.flux);
    root["separation"] = report.separation;
    if (report.converged) {
        root["convergence"] = {{"coarse_grid_n", report.coarse_grid_n.value_or(0)},
                               {"mu_coarse", report.mu_coarse.value_or(0.0)},
                               {"delta", std::abs(report.mu - report.mu_coarse.value_or(0.0))},
                               {"converged", *report.converged}};
    }
    root["warnings"] = report.warnings;
    return root.dump(indent) + "\n";
}

std::string refusal_to_json(int p, int q, int r, int grid_n, int indent) {
    json root;
    root["format"] = kReportFormat;
    root["version"] = kReportFormatVersion;
    root["status"] = "nonzero_linking";
    root["grid_n"] = grid_n;
    root["linking"] = {{"p", p}, {"q", q}, {"r", r}};
    root["message"] = NonzeroLinking(p, q, r).what();
    return root.dump(indent) + "\n";
}

std::string report_to_text(const InvariantReport& report) {
    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof buf, "grid            %d^3\n", report.grid_n);
    out << buf;
    std::snprintf(buf, sizeof buf, "linking (p,q,r) (%d, %d, %d)   residuals %.2e %.2e %.2e\n", report.p, report.q,
                  report.r, report.deg_residuals[0], report.deg_residuals[1], report.deg_residuals[2]);
    out << buf;
    std::snprintf(buf, sizeof buf, "nu              %.10f\n", report.nu);
    out << buf;
    std::snprintf(buf, sizeof buf, "mu              %.10f   (distance to nearest integer %.2e)\n", report.mu,
                  report.mu_residual);
    out << buf;
    if (report.converged) {
        std::snprintf(buf, sizeof buf, "mu at %d^3      %.10f   |delta| %.2e  %s\n", report.coarse_grid_n.value_or(0),
                      report.mu_coarse.value_or(0.0), std::abs(report.mu - report.mu_coarse.value_or(0.0)),
                      *report.converged ? "converged" : "NOT converged");
        out << buf;
    }
    for (const auto& w : report.warnings) out << "warning: " << w << "\n";
    return out.str();
}

}  // namespace linkhel
