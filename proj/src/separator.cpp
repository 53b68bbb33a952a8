#include "sepline/separator.hpp"

#include <algorithm>

#include "sepline/errors.hpp"

namespace sepline {

std::vector<SupportLineEntry> build_support_lines(const CoverResult& cover) {
    std::vector<SupportLineEntry> entries;
    entries.reserve(cover.total_sides);
    for (int i = 0; i < static_cast<int>(cover.polygons.size()); ++i) {
        const ConvexPolygon& R = cover.polygons[i];
        for (int s = 0; s < R.size(); ++s) {
            SupportLineEntry e;
            e.line = R.side_line(s);
            e.owner = i;
            e.outward = R.outer_halfplane(s);
            e.side_in_cover = SideId{i, s};
            e.side_in_original = cover.provenance(i, s);
            entries.push_back(std::move(e));
        }
    }
    return entries;
}

IncidenceGraph build_incidence_graph(const CoverResult& cover,
                                     const std::vector<SupportLineEntry>& lines) {
    int n = static_cast<int>(cover.polygons.size());
    int m = static_cast<int>(lines.size());
    IncidenceGraph graph;
    graph.polygon_count = n;
    graph.line_count = m;
    graph.degree.assign(m, 0);
    graph.separated.assign(m, {});

    std::vector<bool> pair_covered(static_cast<std::size_t>(n) * n, false);
    for (int k = 0; k < m; ++k) {
        const SupportLineEntry& e = lines[k];
        for (int j = 0; j < n; ++j) {
            if (j == e.owner) continue;
            if (!polygon_in_halfplane(cover.polygons[j], e.outward)) continue;
            graph.edges.emplace_back(j, k);
            graph.separated[k].push_back(j);
            ++graph.degree[k];
            int lo = std::min(j, e.owner), hi = std::max(j, e.owner);
            pair_covered[static_cast<std::size_t>(lo) * n + hi] = true;
        }
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!pair_covered[static_cast<std::size_t>(i) * n + j])
                throw PairUncoveredError(i, j);
    return graph;
}

SeparatorCertificate select_max_degree_line(const IncidenceGraph& graph,
                                            const std::vector<SupportLineEntry>& lines) {
    int best = 0;
    for (int k = 1; k < graph.line_count; ++k)
        if (graph.degree[k] > graph.degree[best]) best = k;

    const SupportLineEntry& e = lines[best];
    SeparatorCertificate cert;
    cert.owner = e.owner;
    cert.line = e.line;
    cert.source_side_in_original = e.side_in_original;
    cert.outward = e.outward;
    cert.separated = graph.separated[best];
    cert.degree = graph.degree[best];
    cert.line_index = best;
    return cert;
}

SeparatorRun run_separator(const std::vector<ConvexPolygon>& family) {
    SeparatorRun run;
    run.cover = grow_cover(family);
    run.lines = build_support_lines(run.cover);
    run.graph = build_incidence_graph(run.cover, run.lines);
    run.certificate = select_max_degree_line(run.graph, run.lines);
    return run;
}

SeparatorCertificate find_separating_side(const std::vector<ConvexPolygon>& family) {
    return run_separator(family).certificate;
}

}  // namespace sepline
