#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "linkhel/catalog.hpp"
#include "linkhel/charmap.hpp"
#include "linkhel/errors.hpp"
#include "linkhel/invariants.hpp"
#include "linkhel/linkio.hpp"
#include "linkhel/torusfields.hpp"

namespace {

using namespace linkhel;

enum Exit { kOk = 0, kUsage = 1, kDegenerate = 2, kGate = 3 };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Link3 load_link(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return LinkDocument::parse(text).to_link();
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path + ": cannot open for writing");
    return out;
}

struct ComputeArgs {
    std::string input;
    int grid = 64;
    bool check = false;
    bool json = false;
};

int run_compute(const ComputeArgs& a) {
    const Link3 link = load_link(a.input);
    try {
        const InvariantReport report = a.check ? milnor_mu_checked(link, a.grid) : milnor_mu(link, a.grid);
        std::cout << (a.json ? report_to_json(report) : report_to_text(report));
    } catch (const NonzeroLinking& e) {
        if (a.json) {
            std::cout << refusal_to_json(e.p(), e.q(), e.r(), a.grid);
        } else {
            std::printf("linking (p,q,r) (%d, %d, %d)\n", e.p(), e.q(), e.r());
        }
        std::cerr << "linkhel: " << e.what() << "\n";
        return kGate;
    }
    return kOk;
}

struct FieldArgs {
    std::string input;
    int grid = 32;
    std::string out;
};

int run_field(const FieldArgs& a) {
    const Link3 link = load_link(a.input);
    const VectorField3 v = sample_VL(link, a.grid);
    std::ofstream out = open_out(a.out);
    write_csv(out, v);
    return kOk;
}

struct PhiArgs {
    int dim = 2;
    int truncation = 8;
    int grid = 64;
    std::string out;
};

int run_phi(const PhiArgs& a) {
    if (a.truncation < 1) throw InvalidArgument("truncation must be at least 1");
    if (a.grid < 2) throw InvalidArgument("grid must be at least 2");
    std::ofstream out = open_out(a.out);
    const double h = 2.0 * std::numbers::pi / a.grid;
    char buf[128];
    if (a.dim == 2) {
        out << "x,y,phi\n";
        for (int b = 0; b < a.grid; ++b) {
            for (int c = 0; c < a.grid; ++c) {
                std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", c * h, b * h, phi2_eval(c * h, b * h, a.truncation));
                out << buf;
            }
        }
        return kOk;
    }
    out << "x,y,z,phi\n";
    for (int d = 0; d < a.grid; ++d) {
        for (int b = 0; b < a.grid; ++b) {
            for (int c = 0; c < a.grid; ++c) {
                const Vec3 x{c * h, b * h, d * h};
                std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", x.x, x.y, x.z, phi_eval(x, a.truncation));
                out << buf;
            }
        }
    }
    return kOk;
}

int run_catalog_dump(const std::string& name) {
    const CatalogEntry e = catalog_entry(name);
    std::cout << LinkDocument::from_link(e.link, e.name).dump();
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pairwise and triple linking invariants of three-component links in S^3"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* cmd_compute = app.add_subcommand("compute", "Linking numbers and triple linking number of a link file");
    cmd_compute->add_option("input", compute.input, "Link document (JSON)")->required();
    cmd_compute->add_option("--grid", compute.grid, "Torus grid size N")->capture_default_str();
    cmd_compute->add_flag("--check-convergence", compute.check, "Also run N/2 and compare");
    cmd_compute->add_flag("--json", compute.json, "Machine-readable report");

    FieldArgs field;
    auto* cmd_field = app.add_subcommand("field", "Export the sampled torus field of a link as CSV");
    cmd_field->add_option("input", field.input, "Link document (JSON)")->required();
    cmd_field->add_option("--grid", field.grid, "Torus grid size N")->capture_default_str();
    cmd_field->add_option("--out", field.out, "Output CSV path")->required();

    PhiArgs phi;
    auto* cmd_phi = app.add_subcommand("phi", "Tabulate the truncated fundamental solution on the 2- or 3-torus");
    cmd_phi->add_option("--dim", phi.dim, "Torus dimension")->check(CLI::IsMember({2, 3}))->capture_default_str();
    cmd_phi->add_option("--truncation", phi.truncation, "Series truncation M")->capture_default_str();
    cmd_phi->add_option("--grid", phi.grid, "Nodes per axis")->capture_default_str();
    cmd_phi->add_option("--out", phi.out, "Output CSV path")->required();

    auto* cmd_catalog = app.add_subcommand("catalog", "Built-in links");
    cmd_catalog->require_subcommand(1);
    auto* cmd_list = cmd_catalog->add_subcommand("list", "Print catalog names");
    std::string dump_name;
    auto* cmd_dump = cmd_catalog->add_subcommand("dump", "Print a catalog link as a link document");
    cmd_dump->add_option("name", dump_name, "Catalog entry")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*cmd_compute) return run_compute(compute);
        if (*cmd_field) return run_field(field);
        if (*cmd_phi) return run_phi(phi);
        if (*cmd_list) {
            for (const auto& n : catalog_names()) std::cout << n << "\n";
            return kOk;
        }
        if (*cmd_dump) return run_catalog_dump(dump_name);
    } catch (const DegenerateInput& e) {
        std::cerr << "linkhel: degenerate input: " << e.what() << "\n";
        return kDegenerate;
    } catch (const NonzeroLinking& e) {
        std::cerr << "linkhel: " << e.what() << "\n";
        return kGate;
    } catch (const Error& e) {
        std::cerr << "linkhel: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
