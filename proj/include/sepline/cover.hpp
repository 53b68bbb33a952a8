#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepline/geometry.hpp"

namespace sepline {

/// The triangle on the far side of a polygon side, bounded by that side and
/// the supporting lines of the two adjacent sides.
struct ReducibilityTriangle {
    Point2 apex;
    int base_side = 0;
    ConvexPolygon triangle;
};

/// Result of growing a family of interior-disjoint polygons until no side is
/// reducible.  Side provenance of each grown polygon points back to the
/// original side whose supporting line carries it.
struct CoverResult {
    std::vector<ConvexPolygon> polygons;
    int total_sides = 0;
    int reductions_performed = 0;

    SideId provenance(int polygon, int side) const {
        return *polygons[polygon].side_provenance(side);
    }
};

/// The triangle t for side s of P, or nullopt when the adjacent side lines
/// are parallel or diverge away from P (interior angle sum at the side's
/// endpoints <= pi).
std::optional<ReducibilityTriangle> reducibility_triangle(const ConvexPolygon& P, int s);

/// True iff side s of family[i] has a bounded triangle whose interior meets
/// no other polygon of the family.
bool is_reducible(const std::vector<ConvexPolygon>& family, int i, int s);

/// P with side t.base_side absorbed: the side's endpoints are replaced by
/// the apex; exactly one side fewer; adjacent sides keep their lines and
/// provenance.
ConvexPolygon reduce_side(const ConvexPolygon& P, const ReducibilityTriangle& t);

/// Repeatedly absorbs the first reducible side (scanning polygons and sides
/// in index order, restarting after every reduction) until none remains.
/// Throws ValidationError when n < 3 or interiors overlap.
CoverResult grow_cover(const std::vector<ConvexPolygon>& family);

struct CoverCheckReport {
    bool containment_ok = false;
    bool side_support_ok = false;
    bool disjoint_ok = false;
    bool side_bound_ok = false;
    bool irreducible_ok = false;
    std::string details;

    bool pass() const {
        return containment_ok && side_support_ok && disjoint_ok && side_bound_ok &&
               irreducible_ok;
    }
};

/// Re-checks every guarantee of grow_cover against the original family:
/// vertex containment, side-line support through provenance, pairwise
/// interior-disjointness, the 9n-9 side bound, and fixed-point
/// irreducibility.  Failures are reported with witnesses, never thrown.
CoverCheckReport assert_cover_conditions(const std::vector<ConvexPolygon>& original,
                                         const CoverResult& cover);

}  // namespace sepline
