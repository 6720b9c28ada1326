#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "linkhel/curve.hpp"

namespace linkhel {

/// Known invariants of a catalog link, as (p, q, r) = (lk(Y,Z), lk(X,Z), lk(X,Y))
/// plus |mu| when the triple linking number is defined.
struct ExpectedInvariants {
    int p = 0, q = 0, r = 0;
    std::optional<double> abs_mu;
    std::string provenance;
};

struct CatalogEntry {
    std::string name;
    Link3 link;
    std::optional<ExpectedInvariants> expected;
    /// Samples per component used to build the curves.
    int samples = 0;
};

/// Three mutually perpendicular ellipses (semi-axes 1 and 0.4) in the xy, yz and zx
/// planes of R^3, lifted to S^3 by inverse stereographic projection.
CatalogEntry borromean();

/// Three small round circles around mutually distant points of S^3.
CatalogEntry unlink();

/// Two great circles forming a Hopf link plus a small circle split off from both.
CatalogEntry hopf_pair_plus_unknot();

std::vector<std::string> catalog_names();
/// Throws InvalidArgument for unknown names.
CatalogEntry catalog_entry(const std::string& name);

/// Reflection of R^4 negating the k coordinate of every component.
CatalogEntry mirror(const CatalogEntry& e);
/// New component i is old component order[i].
CatalogEntry permute(const CatalogEntry& e, std::array<int, 3> order);
CatalogEntry reverse_component(const CatalogEntry& e, int which);

}  // namespace linkhel
