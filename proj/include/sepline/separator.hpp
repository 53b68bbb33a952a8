#pragma once

#include <vector>

#include "sepline/cover.hpp"
#include "sepline/geometry.hpp"

namespace sepline {

/// One supporting line of one cover polygon side.  The same geometric line
/// appears once per owning polygon (multiset semantics); `outward` is the
/// closed halfplane away from the owner.
struct SupportLineEntry {
    DirectedLine line;
    int owner = 0;
    HalfPlane outward;
    SideId side_in_cover;
    SideId side_in_original;
};

/// Bipartite incidence structure between cover polygons and support lines:
/// edge (j, k) means polygon j lies wholly in line k's outward halfplane.
struct IncidenceGraph {
    int polygon_count = 0;
    int line_count = 0;
    std::vector<std::pair<int, int>> edges;   // (polygon j, line k)
    std::vector<int> degree;                  // per line k
    std::vector<std::vector<int>> separated;  // per line k, sorted polygon indices

    long long edge_count() const { return static_cast<long long>(edges.size()); }
};

/// A side line of P_owner together with the polygons it separates from it.
struct SeparatorCertificate {
    int owner = 0;
    DirectedLine line;
    SideId source_side_in_original;
    HalfPlane outward;
    std::vector<int> separated;
    int degree = 0;
    int line_index = 0;
};

/// One entry per side of each cover polygon, in (polygon, side) order.
std::vector<SupportLineEntry> build_support_lines(const CoverResult& cover);

/// Builds the incidence graph and verifies that every polygon pair is
/// covered by at least one edge; throws PairUncoveredError otherwise.
IncidenceGraph build_incidence_graph(const CoverResult& cover,
                                     const std::vector<SupportLineEntry>& lines);

/// Picks a maximum-degree line (ties: smallest index) and packages it as a
/// certificate.  Degree is at least ceil(C(n,2) / m) >= ceil(n / 18).
SeparatorCertificate select_max_degree_line(const IncidenceGraph& graph,
                                            const std::vector<SupportLineEntry>& lines);

/// Full pipeline: grow the cover, build the support-line multiset and the
/// incidence graph, select the best line.  The certificate line supports a
/// side of the original family[owner] and separates it from at least
/// ceil(n/18) family members.
SeparatorCertificate find_separating_side(const std::vector<ConvexPolygon>& family);

/// Same as find_separating_side but keeps the intermediate structures.
struct SeparatorRun {
    CoverResult cover;
    std::vector<SupportLineEntry> lines;
    IncidenceGraph graph;
    SeparatorCertificate certificate;
};
SeparatorRun run_separator(const std::vector<ConvexPolygon>& family);

/// ceil(a / b) for positive integers.
inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace sepline
