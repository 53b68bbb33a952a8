#pragma once

#include <optional>
#include <vector>

#include "sepline/cover.hpp"
#include "sepline/geometry.hpp"
#include "sepline/separator.hpp"

namespace sepline {

/// How many sets lie wholly in the closed left / right halfplane of a line.
/// Sets straddling the line count on neither side.
struct SideCounts {
    int left = 0;
    int right = 0;

    int max() const { return left > right ? left : right; }
    bool operator==(const SideCounts& o) const {
        return left == o.left && right == o.right;
    }
};

/// A line weakly separating sets i and j whose larger side count is minimal
/// over the candidate family.
struct MinMaxLine {
    int i = 0;
    int j = 0;
    DirectedLine line;
    SideCounts counts;
    int g = 0;
};

/// Output of the full pipeline: a pair (A, B) such that every line weakly
/// separating A from B leaves at least `guarantee` sets wholly on one
/// closed side, opposite A or B.
struct TheoremCertificate {
    int first = 0;
    int second = 0;
    MinMaxLine witness;
    int guarantee = 0;
    std::vector<int> separated_by_witness;
    std::vector<ConvexPolygon> clipped_family;
};

/// Marker used in clipped-polygon side provenance for bounding-triangle
/// sides; other sides carry {i, j} for the line separating sets i and j.
inline constexpr int kBoundingTriangleOwner = -1;

SideCounts count_sides_of_line(const std::vector<ConvexPolygon>& sets,
                               const DirectedLine& l);

/// The finite stand-in for "all lines": every canonical line through two
/// distinct instance vertices plus, per vertex pair, four exact
/// perturbations (normal nudge in both directions, tilt about the pair's
/// midpoint in both directions).  Deduplicated and sorted canonically.
std::vector<DirectedLine> candidate_lines(const std::vector<ConvexPolygon>& sets);

/// Among candidate lines weakly separating sets i and j, one minimizing
/// max(left, right); ties broken by canonical line order.
MinMaxLine minmax_separating_line(const std::vector<ConvexPolygon>& sets, int i, int j,
                                  int threads = 1);

/// A right triangle with axis-parallel legs whose open interior contains
/// every vertex of every set (bounding box scaled by 2, then circumscribed).
ConvexPolygon bounding_triangle(const std::vector<ConvexPolygon>& sets);

/// Pairwise min-max separating lines for all i < j (the [i][j] entries with
/// i < j are populated; the matrix is symmetric by reference).
using MinMaxMatrix = std::vector<std::vector<std::optional<MinMaxLine>>>;
MinMaxMatrix all_minmax_lines(const std::vector<ConvexPolygon>& sets, int threads = 1);

/// P_i = T intersected with every closed halfplane of line (i,j) containing
/// set i.  Sides carry provenance {i, j} or the bounding-triangle marker.
std::vector<ConvexPolygon> build_clipped_polygons(const std::vector<ConvexPolygon>& sets,
                                                  const ConvexPolygon& T,
                                                  const MinMaxMatrix& lines);

TheoremCertificate solve(const std::vector<ConvexPolygon>& sets, int threads = 1);

/// solve() plus the intermediate structures, for emission and rendering.
struct SolveTrace {
    TheoremCertificate certificate;
    ConvexPolygon bounding;
    MinMaxMatrix minmax_lines;
    std::optional<CoverResult> cover_of_clipped;        // n >= 3 only
    std::optional<SeparatorCertificate> separator;      // n >= 3 only
};
SolveTrace solve_trace(const std::vector<ConvexPolygon>& sets, int threads = 1);

}  // namespace sepline
