#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "linkhel/curve.hpp"

namespace linkhel {

/// Parameter held fixed when restricting the characteristic map to a 2-torus.
/// Free parameters, in orientation order: frozen s -> (t, u), frozen t -> (u, s),
/// frozen u -> (s, t).
enum class Axis { s = 0, t = 1, u = 2 };

enum class MapKind { symmetric, asymmetric };

/// Degree integrals further than this from an integer are rejected.
inline constexpr double kDegreeResidualLimit = 0.1;
/// Component means of V_L above this trigger a warning in the report.
inline constexpr double kMeanWarningLevel = 1e-4;
/// |mu_N - mu_{N/2}| below this marks a report as converged.
inline constexpr double kConvergenceTolerance = 0.05;

struct DegreeResult {
    int degree = 0;
    double raw = 0.0;
    double residual = 0.0;
};

/// Degree of g_L (or the asymmetric map) on the coordinate 2-torus where `axis`
/// is held at `frozen_value`, integrated on an n x n grid with spectral partials.
/// Requires n >= 16. Throws DegenerateDegree when the residual exceeds 0.1.
DegreeResult subtorus_degree(const Link3& link, Axis axis, double frozen_value, int n,
                             MapKind kind = MapKind::symmetric);

/// Gauss linking integral by the trapezoidal rule on m x m nodes.
/// Throws CurvesTooClose when two nodes are within `min_distance`.
double gauss_linking(const SpaceCurve& a, const SpaceCurve& b, int m, double min_distance = kDefaultSeparation);

struct InvariantReport {
    /// Degrees with frozen s, t, u respectively: lk(Y,Z), lk(X,Z), lk(X,Y).
    int p = 0, q = 0, r = 0;
    std::array<double, 3> deg_raw{};
    std::array<double, 3> deg_residuals{};
    double nu = 0.0;
    double mu = 0.0;
    double mu_residual = 0.0;
    int grid_n = 0;
    /// Set only when a coarser grid was also run.
    std::optional<bool> converged;
    std::optional<double> mu_coarse;
    std::optional<int> coarse_grid_n;
    /// 4 pi^2 times the mean of each V_L component; these reproduce p, q, r.
    std::array<double, 3> flux{};
    /// Coefficient-space evaluation of the same helicity.
    double nu_spectral = 0.0;
    double separation = 0.0;
    std::vector<std::string> warnings;
};

/// The three subtorus degrees at frozen value 0, as (p, q, r).
std::array<DegreeResult, 3> linking_degrees(const Link3& link, int n);

/// Triple linking number via the helicity of V_L. Requires n >= 16 and even.
/// Throws NonzeroLinking unless all subtorus degrees vanish.
InvariantReport milnor_mu(const Link3& link, int n);

/// milnor_mu on n and n/2, recording |mu_n - mu_{n/2}| in the report.
InvariantReport milnor_mu_checked(const Link3& link, int n);

struct BruteforceMu {
    double mu = 0.0;
    /// Bound on |mu - milnor_mu(...).mu| at the same grid.
    double truncation_bound = 0.0;
};

/// Half the double-integral helicity of V_L. Requires n <= 12; no linking gate.
BruteforceMu milnor_mu_bruteforce(const Link3& link, int n, int truncation);

}  // namespace linkhel
