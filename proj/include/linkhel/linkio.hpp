#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linkhel/curve.hpp"
#include "linkhel/invariants.hpp"

namespace linkhel {

inline constexpr int kLinkFormatVersion = 1;
inline constexpr int kReportFormatVersion = 1;

/// One component of a link document: either samples (4-vectors on S^3 or
/// 3-vectors in R^3) or the trigonometric coefficients of an S^3 curve.
struct ComponentDoc {
    std::string space = "S3";
    int orientation = 1;
    std::vector<std::vector<double>> samples;
    std::optional<TrigPoly4> coeffs;
};

/// JSON link file:
///   {"format": "linkhel.link", "version": 1, "name": ..., "components": [c0, c1, c2]}
/// with each component {"space": "S3"|"R3", "orientation": +1|-1} plus either
/// "samples": [[...], ...] or "coeffs": {"degree": D, "w": [[re, im], ...], "x", "y", "z"}
/// listing k = 0..D.
struct LinkDocument {
    int version = kLinkFormatVersion;
    std::string name;
    std::vector<ComponentDoc> components;

    /// Throws ParseError with a line/column or field-path diagnostic.
    static LinkDocument parse(std::string_view text);
    /// Coefficient form of each component; parses back to the identical curves.
    static LinkDocument from_link(const Link3& link, std::string name);

    std::string dump(int indent = 2) const;
    /// Throws ParseError for structurally valid but unusable components and
    /// DegenerateInput errors from curve or link construction.
    Link3 to_link(double min_separation = kDefaultSeparation) const;
};

/// Report JSON (schema: schemas/report.schema.json), status "ok".
std::string report_to_json(const InvariantReport& report, int indent = 2);
/// Report JSON for a link whose pairwise linking numbers rule out the triple invariant.
std::string refusal_to_json(int p, int q, int r, int grid_n, int indent = 2);
/// Plain-text rendering for terminals.
std::string report_to_text(const InvariantReport& report);

}  // namespace linkhel
