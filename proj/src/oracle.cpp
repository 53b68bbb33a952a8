#include "sepline/oracle.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "sepline/errors.hpp"
#include "sepline/parallel.hpp"

namespace sepline {

namespace {

// The oracle re-implements its scanning loops on top of the exact
// primitives only, so a defect in the solver's candidate bookkeeping cannot
// hide from it.

int weak_side(const ConvexPolygon& set, const DirectedLine& l) {
    bool neg = false, pos = false;
    for (const Point2& v : set.vertices()) {
        int s = l.residual_sign(v);
        if (s < 0) neg = true;
        else if (s > 0) pos = true;
        if (neg && pos) return 0;
    }
    return pos ? 1 : -1;
}

SideCounts oracle_counts(const std::vector<ConvexPolygon>& sets, const DirectedLine& l) {
    SideCounts counts;
    for (const ConvexPolygon& s : sets) {
        int side = weak_side(s, l);
        if (side < 0) ++counts.left;
        else if (side > 0) ++counts.right;
    }
    return counts;
}

struct ScanState {
    long long checked = 0;
    int min_max = -1;
    std::optional<DirectedLine> argmin;
    std::optional<SideCounts> argmin_counts;

    void consider(const DirectedLine& line, const SideCounts& counts) {
        int g = counts.max();
        if (min_max < 0 || g < min_max) {
            min_max = g;
            argmin = line;
            argmin_counts = counts;
        }
    }
};

std::vector<Point2> all_vertices(const Instance& inst) {
    std::vector<Point2> pts;
    for (const ConvexPolygon& s : inst.sets)
        for (const Point2& v : s.vertices()) pts.push_back(v);
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

/// Runs the full per-pair candidate enumeration (base line through the two
/// vertices plus the four perturbations) and reports every candidate that
/// weakly separates sets a and b.
ScanState scan_pair_candidates(const Instance& inst, int a, int b, int threads) {
    std::vector<Point2> pts = all_vertices(inst);
    int v = static_cast<int>(pts.size());
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(v) * (v - 1) / 2);
    for (int p = 0; p < v; ++p)
        for (int q = p + 1; q < v; ++q) pairs.emplace_back(p, q);

    std::vector<ScanState> partial(std::max(1, threads));
    int chunks = std::max(1, threads);
    int per_chunk = (static_cast<int>(pairs.size()) + chunks - 1) / std::max(1, chunks);

    auto worker = [&](int chunk_idx, int begin, int end) {
        ScanState& state = partial[chunk_idx];
        std::vector<DirectedLine> batch;
        for (int k = begin; k < end; ++k) {
            const Point2& p = pts[pairs[k].first];
            const Point2& q = pts[pairs[k].second];
            batch.clear();
            DirectedLine base = DirectedLine::through(p, q);
            batch.push_back(base);
            if (auto delta = safe_nudge_magnitude(base, pts)) {
                batch.push_back(nudged_line(base, *delta, +1));
                batch.push_back(nudged_line(base, *delta, -1));
            }
            Rational eta = safe_rotation_magnitude(p, q, pts).value_or(Rational(1));
            batch.push_back(rotated_about_midpoint(p, q, eta, +1));
            batch.push_back(rotated_about_midpoint(p, q, eta, -1));

            for (const DirectedLine& line : batch) {
                ++state.checked;
                int sa = weak_side(inst.sets[a], line);
                if (sa == 0) continue;
                int sb = weak_side(inst.sets[b], line);
                if (sb == 0 || sb == sa) continue;
                state.consider(line, oracle_counts(inst.sets, line));
            }
        }
    };

    if (chunks == 1) {
        worker(0, 0, static_cast<int>(pairs.size()));
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < chunks; ++t) {
            int begin = t * per_chunk;
            int end = std::min<int>(static_cast<int>(pairs.size()), begin + per_chunk);
            if (begin >= end) break;
            pool.emplace_back(worker, t, begin, end);
        }
        for (std::thread& th : pool) th.join();
    }

    ScanState merged;
    for (const ScanState& s : partial) {
        merged.checked += s.checked;
        if (s.min_max < 0) continue;
        if (merged.min_max < 0 || s.min_max < merged.min_max) {
            merged.min_max = s.min_max;
            merged.argmin = s.argmin;
            merged.argmin_counts = s.argmin_counts;
        }
    }
    return merged;
}

void require_pair(const Instance& inst, int a, int b) {
    int n = inst.size();
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
        throw ValidationError("pair indices out of range");
}

}  // namespace

VerificationReport verify_certificate(const Instance& inst, const CertificateDoc& cert,
                                      int threads) {
    std::string digest = instance_digest(inst);
    if (digest != cert.instance_hash)
        throw HashMismatchError("certificate was produced for a different instance");
    require_pair(inst, cert.first, cert.second);

    ScanState scan = scan_pair_candidates(inst, cert.first, cert.second, threads);

    VerificationReport report;
    report.instance_hash = digest;
    report.claimed_guarantee = cert.guarantee;
    report.lines_checked = scan.checked;
    report.min_observed_max = scan.min_max;
    long long floor_g = ceil_div(inst.size(), 18);
    report.pass = scan.min_max >= 0 && scan.min_max >= cert.guarantee &&
                  cert.guarantee >= floor_g;
    if (scan.min_max >= 0 && scan.min_max < cert.guarantee)
        report.counterexample = std::make_pair(*scan.argmin, *scan.argmin_counts);
    return report;
}

int exhaustive_minmax(const Instance& inst, int i, int j, int threads) {
    require_pair(inst, i, j);
    ScanState scan = scan_pair_candidates(inst, i, j, threads);
    if (scan.min_max < 0)
        throw std::logic_error("no candidate line separates the requested pair");
    return scan.min_max;
}

namespace {

Point2 random_interior_point(const ConvexPolygon& poly, std::mt19937_64& rng) {
    Rational sx = 0, sy = 0, sw = 0;
    for (const Point2& v : poly.vertices()) {
        long w = static_cast<long>(1 + rng() % 1000);
        sx += Rational(w) * v.x;
        sy += Rational(w) * v.y;
        sw += w;
    }
    return {sx / sw, sy / sw};
}

Rational side_residual(const HalfPlane& h, const Point2& p) {
    Rational r = Rational(h.line.a) * p.x + Rational(h.line.b) * p.y - Rational(h.line.c);
    return h.side == Side::Left ? r : Rational(-r);
}

/// Parameter range of {a + t*(b-a)} inside the polygon, clipped to [0, 1].
std::pair<Rational, Rational> segment_range_inside(const ConvexPolygon& poly,
                                                   const Point2& a, const Point2& b) {
    Rational lo = 0, hi = 1;
    for (int s = 0; s < poly.size(); ++s) {
        HalfPlane h = poly.inner_halfplane(s);
        Rational ra = side_residual(h, a);
        Rational rb = side_residual(h, b);
        // inside means residual <= 0; interpolation is linear in t
        if (ra <= 0 && rb <= 0) continue;
        if (ra > 0 && rb > 0) return {1, 0};  // empty
        Rational t = ra / (ra - rb);
        if (ra > 0) {
            if (t > lo) lo = t;
        } else {
            if (t < hi) hi = t;
        }
    }
    return {lo, hi};
}

}  // namespace

SamplingResult sampled_minmax(const Instance& inst, int i, int j, int samples,
                              std::uint64_t seed) {
    require_pair(inst, i, j);
    std::mt19937_64 rng(seed);
    const ConvexPolygon& A = inst.sets[i];
    const ConvexPolygon& B = inst.sets[j];

    SamplingResult result;
    long long attempts = 0;
    const long long budget = 400LL * samples;
    while (result.accepted < samples && attempts < budget) {
        ++attempts;
        Point2 a = random_interior_point(A, rng);
        Point2 b = random_interior_point(B, rng);
        auto [a_lo, a_hi] = segment_range_inside(A, a, b);
        auto [b_lo, b_hi] = segment_range_inside(B, a, b);
        Rational lo = a_hi;  // leaving A
        Rational hi = b_lo;  // entering B
        if (hi < lo) continue;
        long u = static_cast<long>(1 + rng() % 999);
        Rational t = lo + (hi - lo) * Rational(u, 1000);
        Point2 m{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};

        long dx = static_cast<long>(rng() % 2001) - 1000;
        long dy = static_cast<long>(rng() % 2001) - 1000;
        if (dx == 0 && dy == 0) continue;
        Rational ca = -dy, cb = dx;
        DirectedLine line(ca, cb, ca * m.x + cb * m.y);

        int sa = weak_side(A, line);
        if (sa == 0) continue;
        int sb = weak_side(B, line);
        if (sb == 0 || sb == sa) continue;

        SideCounts counts = oracle_counts(inst.sets, line);
        int g = counts.max();
        if (result.min_observed_max < 0 || g < result.min_observed_max)
            result.min_observed_max = g;
        ++result.accepted;
    }
    return result;
}

}  // namespace sepline
