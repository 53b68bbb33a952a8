#include "sepline/cover.hpp"

#include <sstream>

#include "sepline/errors.hpp"

namespace sepline {

std::optional<ReducibilityTriangle> reducibility_triangle(const ConvexPolygon& P, int s) {
    DirectedLine base = P.side_line(s);
    DirectedLine prev = P.side_line(s - 1);
    DirectedLine next = P.side_line(s + 1);

    std::optional<Point2> apex = line_intersection(prev, next);
    if (!apex) return std::nullopt;

    // Bounded iff the adjacent lines meet strictly on the far side of s.
    int apex_sign = base.residual_sign(*apex);
    int inner_sign = base.residual_sign(P.vertex(s + 2));
    if (apex_sign == 0 || apex_sign == inner_sign) return std::nullopt;

    ConvexPolygon tri({P.vertex(s), P.vertex(s + 1), *apex});
    return ReducibilityTriangle{*apex, s, std::move(tri)};
}

bool is_reducible(const std::vector<ConvexPolygon>& family, int i, int s) {
    std::optional<ReducibilityTriangle> t = reducibility_triangle(family[i], s);
    if (!t) return false;
    for (int j = 0; j < static_cast<int>(family.size()); ++j) {
        if (j == i) continue;
        if (interiors_intersect(t->triangle, family[j])) return false;
    }
    return true;
}

ConvexPolygon reduce_side(const ConvexPolygon& P, const ReducibilityTriangle& t) {
    int n = P.size();
    int s = t.base_side;
    std::vector<Point2> verts;
    ConvexPolygon::Provenance prov;
    verts.reserve(n - 1);
    prov.reserve(n - 1);
    // Walk from the vertex after the removed side; the apex replaces both
    // endpoints of side s.
    for (int k = s + 2; k < s + n; ++k) {
        verts.push_back(P.vertex(k));
        prov.push_back(P.side_provenance(k));
    }
    verts.push_back(t.apex);
    prov.push_back(P.side_provenance(s + 1));  // apex starts the extended next side

    // The side arriving at the apex is the extended previous side; its
    // provenance entry sits at the vertex before the apex, which the loop
    // already copied as side s-1's.
    return ConvexPolygon(std::move(verts), std::move(prov));
}

namespace {

void require_valid_family(const std::vector<ConvexPolygon>& family) {
    int n = static_cast<int>(family.size());
    if (n < 3) throw ValidationError("cover growth needs at least 3 polygons");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (interiors_intersect(family[i], family[j]))
                throw ValidationError("polygons " + std::to_string(i) + " and " +
                                      std::to_string(j) + " have overlapping interiors");
}

}  // namespace

CoverResult grow_cover(const std::vector<ConvexPolygon>& family) {
    require_valid_family(family);
    int n = static_cast<int>(family.size());

    CoverResult result;
    result.polygons.reserve(n);
    for (int i = 0; i < n; ++i)
        result.polygons.push_back(family[i].with_self_provenance(i));

    // Growth never shrinks any polygon, so a side seen irreducible stays
    // irreducible until its own polygon changes; memoizing those verdicts
    // reproduces the plain restart-scan reduction sequence exactly.
    std::vector<std::vector<bool>> known_irreducible(n);
    for (int i = 0; i < n; ++i)
        known_irreducible[i].assign(result.polygons[i].size(), false);

    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (int i = 0; i < n && !reduced; ++i) {
            for (int s = 0; s < result.polygons[i].size() && !reduced; ++s) {
                if (known_irreducible[i][s]) continue;
                std::optional<ReducibilityTriangle> t =
                    reducibility_triangle(result.polygons[i], s);
                bool ok = t.has_value();
                if (ok) {
                    for (int j = 0; j < n; ++j) {
                        if (j == i) continue;
                        if (interiors_intersect(t->triangle, result.polygons[j])) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (!ok) {
                    known_irreducible[i][s] = true;
                    continue;
                }
                result.polygons[i] = reduce_side(result.polygons[i], *t);
                known_irreducible[i].assign(result.polygons[i].size(), false);
                ++result.reductions_performed;
                reduced = true;
            }
        }
    }

    result.total_sides = 0;
    for (const ConvexPolygon& p : result.polygons) result.total_sides += p.size();
    return result;
}

CoverCheckReport assert_cover_conditions(const std::vector<ConvexPolygon>& original,
                                         const CoverResult& cover) {
    CoverCheckReport report;
    std::ostringstream details;
    int n = static_cast<int>(original.size());
    if (static_cast<int>(cover.polygons.size()) != n) {
        report.details = "family size mismatch";
        return report;
    }

    report.containment_ok = true;
    for (int i = 0; i < n && report.containment_ok; ++i)
        for (const Point2& v : original[i].vertices())
            if (!cover.polygons[i].contains(v)) {
                report.containment_ok = false;
                details << "vertex (" << rational_to_string(v.x) << ", "
                        << rational_to_string(v.y) << ") of polygon " << i
                        << " escapes its cover; ";
                break;
            }

    report.side_support_ok = true;
    for (int i = 0; i < n && report.side_support_ok; ++i) {
        const ConvexPolygon& R = cover.polygons[i];
        for (int s = 0; s < R.size(); ++s) {
            const auto& id = R.side_provenance(s);
            if (!id || id->owner != i ||
                original[i].side_line(id->side) != R.side_line(s)) {
                report.side_support_ok = false;
                details << "side " << s << " of cover polygon " << i
                        << " is not supported by an original side; ";
                break;
            }
        }
    }

    report.disjoint_ok = true;
    for (int i = 0; i < n && report.disjoint_ok; ++i)
        for (int j = i + 1; j < n; ++j)
            if (interiors_intersect(cover.polygons[i], cover.polygons[j])) {
                report.disjoint_ok = false;
                details << "cover polygons " << i << " and " << j << " overlap; ";
                break;
            }

    int total = 0;
    for (const ConvexPolygon& p : cover.polygons) total += p.size();
    report.side_bound_ok = (total == cover.total_sides) && (total <= 9 * n - 9);
    if (!report.side_bound_ok)
        details << "side count " << total << " exceeds " << (9 * n - 9) << "; ";

    report.irreducible_ok = true;
    for (int i = 0; i < n && report.irreducible_ok; ++i)
        for (int s = 0; s < cover.polygons[i].size(); ++s)
            if (is_reducible(cover.polygons, i, s)) {
                report.irreducible_ok = false;
                details << "side " << s << " of cover polygon " << i
                        << " is still reducible; ";
                break;
            }

    report.details = details.str();
    return report;
}

}  // namespace sepline
