#include "sepline/pipeline.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "sepline/errors.hpp"
#include "sepline/parallel.hpp"

namespace sepline {

namespace {

enum class SetClass : std::uint8_t { Left, Right, Straddle };

std::vector<Point2> collect_vertices(const std::vector<ConvexPolygon>& sets) {
    std::vector<Point2> pts;
    for (const ConvexPolygon& s : sets)
        for (const Point2& v : s.vertices()) pts.push_back(v);
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

/// All candidate lines for one defining vertex pair: the base line plus the
/// four exact perturbations that reach the adjacent sign cells.
void emit_pair_candidates(const Point2& p, const Point2& q,
                          std::span<const Point2> all_points,
                          std::vector<DirectedLine>& out) {
    DirectedLine base = DirectedLine::through(p, q);
    out.push_back(base);
    if (std::optional<Rational> delta = safe_nudge_magnitude(base, all_points)) {
        out.push_back(nudged_line(base, *delta, +1));
        out.push_back(nudged_line(base, *delta, -1));
    }
    Rational eta = safe_rotation_magnitude(p, q, all_points).value_or(Rational(1));
    out.push_back(rotated_about_midpoint(p, q, eta, +1));
    out.push_back(rotated_about_midpoint(p, q, eta, -1));
}

SetClass classify(const ConvexPolygon& set, const DirectedLine& l) {
    bool has_neg = false, has_pos = false;
    for (const Point2& v : set.vertices()) {
        int s = l.residual_sign(v);
        if (s < 0) has_neg = true;
        else if (s > 0) has_pos = true;
        if (has_neg && has_pos) return SetClass::Straddle;
    }
    // A full-dimensional polygon cannot lie inside the line.
    return has_pos ? SetClass::Right : SetClass::Left;
}

/// Candidate lines with per-set containment classes and per-line counts.
struct ScanTable {
    std::vector<DirectedLine> lines;
    std::vector<SetClass> cls;  // lines.size() * n, row-major
    std::vector<SideCounts> counts;
    int n = 0;

    SetClass at(std::size_t line, int set) const {
        return cls[line * static_cast<std::size_t>(n) + set];
    }
    bool separates(std::size_t line, int i, int j) const {
        SetClass a = at(line, i), b = at(line, j);
        return (a == SetClass::Left && b == SetClass::Right) ||
               (a == SetClass::Right && b == SetClass::Left);
    }
};

ScanTable build_scan_table(const std::vector<ConvexPolygon>& sets, int threads) {
    ScanTable table;
    table.n = static_cast<int>(sets.size());
    table.lines = candidate_lines(sets);
    std::size_t m = table.lines.size();
    table.cls.resize(m * table.n);
    table.counts.resize(m);
    parallel_chunks(static_cast<int>(m), threads, [&](int begin, int end) {
        for (int k = begin; k < end; ++k) {
            SideCounts counts;
            for (int s = 0; s < table.n; ++s) {
                SetClass c = classify(sets[s], table.lines[k]);
                table.cls[static_cast<std::size_t>(k) * table.n + s] = c;
                if (c == SetClass::Left) ++counts.left;
                else if (c == SetClass::Right) ++counts.right;
            }
            table.counts[k] = counts;
        }
    });
    return table;
}

MinMaxLine minmax_from_table(const ScanTable& table, int i, int j) {
    std::optional<std::size_t> best;
    int best_g = 0;
    for (std::size_t k = 0; k < table.lines.size(); ++k) {
        if (!table.separates(k, i, j)) continue;
        int g = table.counts[k].max();
        if (!best || g < best_g) {
            best = k;
            best_g = g;
        }
    }
    if (!best)
        throw std::logic_error("no candidate line separates sets " + std::to_string(i) +
                               " and " + std::to_string(j));
    MinMaxLine out;
    out.i = i;
    out.j = j;
    out.line = table.lines[*best];
    out.counts = table.counts[*best];
    out.g = best_g;
    return out;
}

void require_solvable_input(const std::vector<ConvexPolygon>& sets, int min_n) {
    int n = static_cast<int>(sets.size());
    if (n < min_n)
        throw ValidationError("need at least " + std::to_string(min_n) +
                              " sets, got " + std::to_string(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (interiors_intersect(sets[i], sets[j]))
                throw ValidationError("sets " + std::to_string(i) + " and " +
                                      std::to_string(j) +
                                      " have overlapping interiors");
}

/// The closed halfplane of `line` containing the (full-dimensional) set.
HalfPlane halfplane_containing(const DirectedLine& line, const ConvexPolygon& set) {
    for (const Point2& v : set.vertices()) {
        int s = line.residual_sign(v);
        if (s < 0) return {line, Side::Left};
        if (s > 0) return {line, Side::Right};
    }
    throw std::logic_error("set is contained in the line");
}

}  // namespace

SideCounts count_sides_of_line(const std::vector<ConvexPolygon>& sets,
                               const DirectedLine& l) {
    SideCounts counts;
    for (const ConvexPolygon& s : sets) {
        SetClass c = classify(s, l);
        if (c == SetClass::Left) ++counts.left;
        else if (c == SetClass::Right) ++counts.right;
    }
    return counts;
}

std::vector<DirectedLine> candidate_lines(const std::vector<ConvexPolygon>& sets) {
    std::vector<Point2> pts = collect_vertices(sets);
    std::vector<DirectedLine> all;
    if (pts.size() >= 2) all.reserve(5 * pts.size() * (pts.size() - 1) / 2);
    for (std::size_t u = 0; u < pts.size(); ++u)
        for (std::size_t v = u + 1; v < pts.size(); ++v)
            emit_pair_candidates(pts[u], pts[v], pts, all);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

MinMaxLine minmax_separating_line(const std::vector<ConvexPolygon>& sets, int i, int j,
                                  int threads) {
    if (interiors_intersect(sets[i], sets[j]))
        throw ValidationError("sets " + std::to_string(i) + " and " + std::to_string(j) +
                              " have overlapping interiors");
    ScanTable table = build_scan_table(sets, threads);
    return minmax_from_table(table, i, j);
}

ConvexPolygon bounding_triangle(const std::vector<ConvexPolygon>& sets) {
    if (sets.empty()) throw ValidationError("bounding triangle of an empty family");
    ConvexPolygon::BBox box = sets[0].bbox();
    for (const ConvexPolygon& s : sets) {
        const auto& b = s.bbox();
        box.min_x = std::min(box.min_x, b.min_x, std::less<Rational>());
        box.min_y = std::min(box.min_y, b.min_y, std::less<Rational>());
        box.max_x = std::max(box.max_x, b.max_x, std::less<Rational>());
        box.max_y = std::max(box.max_y, b.max_y, std::less<Rational>());
    }
    Rational w = box.max_x - box.min_x;
    Rational h = box.max_y - box.min_y;
    if (sgn(w) == 0 || sgn(h) == 0)
        throw ValidationError("degenerate bounding box");

    // Double the box about its center, then circumscribe with a right
    // triangle; every input vertex ends up strictly interior.
    Rational x0 = box.min_x - w / 2, x1 = box.max_x + w / 2;
    Rational y0 = box.min_y - h / 2, y1 = box.max_y + h / 2;
    Point2 corner{x0, y0};
    Point2 east{x1 + (y1 - y0), y0};
    Point2 north{x0, y1 + (x1 - x0)};
    return ConvexPolygon({corner, east, north});
}

MinMaxMatrix all_minmax_lines(const std::vector<ConvexPolygon>& sets, int threads) {
    int n = static_cast<int>(sets.size());
    ScanTable table = build_scan_table(sets, threads);
    MinMaxMatrix matrix(n, std::vector<std::optional<MinMaxLine>>(n));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    parallel_chunks(static_cast<int>(pairs.size()), threads, [&](int begin, int end) {
        for (int k = begin; k < end; ++k) {
            auto [i, j] = pairs[k];
            matrix[i][j] = minmax_from_table(table, i, j);
        }
    });
    for (auto [i, j] : pairs) matrix[j][i] = matrix[i][j];
    return matrix;
}

std::vector<ConvexPolygon> build_clipped_polygons(const std::vector<ConvexPolygon>& sets,
                                                  const ConvexPolygon& T,
                                                  const MinMaxMatrix& lines) {
    int n = static_cast<int>(sets.size());
    std::vector<ConvexPolygon> clipped;
    clipped.reserve(n);
    for (int i = 0; i < n; ++i) {
        ConvexPolygon poly = T;
        for (int s = 0; s < poly.size(); ++s)
            poly.set_side_provenance(s, SideId{kBoundingTriangleOwner, s});
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const MinMaxLine& mm = *lines[i][j];
            HalfPlane keep = halfplane_containing(mm.line, sets[i]);
            std::optional<ConvexPolygon> cut = clip_polygon(poly, keep);
            if (!cut)
                throw std::logic_error("clipped polygon " + std::to_string(i) +
                                       " vanished");
            poly = std::move(*cut);
            for (int s = 0; s < poly.size(); ++s)
                if (!poly.side_provenance(s)) poly.set_side_provenance(s, SideId{i, j});
        }
        clipped.push_back(std::move(poly));
    }
    return clipped;
}

namespace {

std::vector<int> sets_in_halfplane(const std::vector<ConvexPolygon>& sets,
                                   const HalfPlane& h) {
    std::vector<int> out;
    for (int k = 0; k < static_cast<int>(sets.size()); ++k)
        if (polygon_in_halfplane(sets[k], h)) out.push_back(k);
    return out;
}

}  // namespace

SolveTrace solve_trace(const std::vector<ConvexPolygon>& sets, int threads) {
    require_solvable_input(sets, 2);
    int n = static_cast<int>(sets.size());

    MinMaxMatrix matrix = all_minmax_lines(sets, threads);
    ConvexPolygon T = bounding_triangle(sets);
    std::vector<ConvexPolygon> clipped = build_clipped_polygons(sets, T, matrix);

    TheoremCertificate cert;
    cert.clipped_family = clipped;

    if (n == 2) {
        cert.first = 0;
        cert.second = 1;
        cert.witness = *matrix[0][1];
        cert.guarantee = cert.witness.g;
        HalfPlane outward = halfplane_containing(cert.witness.line, sets[1]);
        cert.separated_by_witness = sets_in_halfplane(sets, outward);
        return SolveTrace{std::move(cert), std::move(T), std::move(matrix),
                          std::nullopt, std::nullopt};
    }

    SeparatorRun run = run_separator(clipped);
    const SeparatorCertificate& sep = run.certificate;

    // Map the winning cover side back to the separating line that cut it.
    SideId side_in_clipped = sep.source_side_in_original;
    std::optional<SideId> source =
        clipped[side_in_clipped.owner].side_provenance(side_in_clipped.side);
    if (!source || source->owner == kBoundingTriangleOwner)
        throw std::logic_error("separator selected a bounding-triangle side");

    int i = source->owner, j = source->side;
    const MinMaxLine& witness = *matrix[i][j];
    cert.first = i;
    cert.second = j;
    cert.witness = witness;
    cert.guarantee = witness.g;
    cert.separated_by_witness = sets_in_halfplane(sets, sep.outward);

    long long floor_guarantee = ceil_div(n, 18);
    if (cert.guarantee < floor_guarantee)
        throw std::logic_error("guarantee fell below ceil(n/18)");

    return SolveTrace{std::move(cert), std::move(T), std::move(matrix),
                      std::move(run.cover), sep};
}

TheoremCertificate solve(const std::vector<ConvexPolygon>& sets, int threads) {
    return solve_trace(sets, threads).certificate;
}

}  // namespace sepline
