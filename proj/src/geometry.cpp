#include "sepline/geometry.hpp"

#include <algorithm>

#include "sepline/errors.hpp"

namespace sepline {

bool lex_less(const Point2& a, const Point2& b) {
    int cx = cmp(a.x, b.x);
    if (cx != 0) return cx < 0;
    return a.y < b.y;
}

Orientation orientation(const Point2& p, const Point2& q, const Point2& r) {
    Rational cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    int s = sgn(cross);
    if (s > 0) return Orientation::CounterClockwise;
    if (s < 0) return Orientation::Clockwise;
    return Orientation::Collinear;
}

DirectedLine::DirectedLine(const Rational& a_, const Rational& b_, const Rational& c_) {
    if (sgn(a_) == 0 && sgn(b_) == 0)
        throw ValidationError("line coefficients (a, b) must not both be zero");

    Integer lcm_den;
    mpz_lcm(lcm_den.get_mpz_t(), a_.get_den().get_mpz_t(), b_.get_den().get_mpz_t());
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c_.get_den().get_mpz_t());

    a = a_.get_num() * (lcm_den / a_.get_den());
    b = b_.get_num() * (lcm_den / b_.get_den());
    c = c_.get_num() * (lcm_den / c_.get_den());

    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1) {
        a /= g;
        b /= g;
        c /= g;
    }
    int lead = sgn(a) != 0 ? sgn(a) : sgn(b);
    if (lead < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
}

DirectedLine DirectedLine::through(const Point2& p, const Point2& q) {
    if (p == q) throw ValidationError("line through two equal points is undefined");
    Rational a = q.y - p.y;
    Rational b = p.x - q.x;
    Rational c = a * p.x + b * p.y;
    return DirectedLine(a, b, c);
}

int DirectedLine::residual_sign(const Point2& p) const {
    thread_local Integer t1, t2, t3;
    mpz_srcptr xn = mpq_numref(p.x.get_mpq_t());
    mpz_srcptr xd = mpq_denref(p.x.get_mpq_t());
    mpz_srcptr yn = mpq_numref(p.y.get_mpq_t());
    mpz_srcptr yd = mpq_denref(p.y.get_mpq_t());

    if (mpz_cmp_ui(xd, 1) == 0 && mpz_cmp_ui(yd, 1) == 0) {
        mpz_mul(t1.get_mpz_t(), a.get_mpz_t(), xn);
        mpz_addmul(t1.get_mpz_t(), b.get_mpz_t(), yn);
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), c.get_mpz_t());
        return mpz_sgn(t1.get_mpz_t());
    }
    // a*xn*yd + b*yn*xd - c*xd*yd
    mpz_mul(t1.get_mpz_t(), a.get_mpz_t(), xn);
    mpz_mul(t1.get_mpz_t(), t1.get_mpz_t(), yd);
    mpz_mul(t2.get_mpz_t(), b.get_mpz_t(), yn);
    mpz_mul(t2.get_mpz_t(), t2.get_mpz_t(), xd);
    mpz_add(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
    mpz_mul(t3.get_mpz_t(), c.get_mpz_t(), xd);
    mpz_mul(t3.get_mpz_t(), t3.get_mpz_t(), yd);
    mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t3.get_mpz_t());
    return mpz_sgn(t1.get_mpz_t());
}

Side DirectedLine::side_of(const Point2& p) const {
    int s = residual_sign(p);
    if (s < 0) return Side::Left;
    if (s > 0) return Side::Right;
    return Side::On;
}

bool DirectedLine::operator<(const DirectedLine& o) const {
    int ca = cmp(a, o.a);
    if (ca != 0) return ca < 0;
    int cb = cmp(b, o.b);
    if (cb != 0) return cb < 0;
    return cmp(c, o.c) < 0;
}

std::string DirectedLine::to_string() const {
    return a.get_str() + "*x + " + b.get_str() + "*y = " + c.get_str();
}

namespace {

Rational signed_area_twice(const std::vector<Point2>& v) {
    Rational s = 0;
    int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i) {
        const Point2& p = v[i];
        const Point2& q = v[(i + 1) % n];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

// Andrew monotone chain with strict turns; returns the CCW hull starting at
// the lexicographically smallest point.  Collinear points are dropped.
std::vector<Point2> strict_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    int n = static_cast<int>(pts.size());
    if (n < 3) return {};

    std::vector<Point2> hull(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && orientation(hull[k - 2], hull[k - 1], pts[i]) !=
                             Orientation::CounterClockwise)
            --k;
        hull[k++] = pts[i];
    }
    int lower = k + 1;
    for (int i = n - 2; i >= 0; --i) {
        while (k >= lower && orientation(hull[k - 2], hull[k - 1], pts[i]) !=
                                 Orientation::CounterClockwise)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices, Provenance provenance) {
    int n = static_cast<int>(vertices.size());
    if (n < 3) throw ValidationError("polygon needs at least 3 vertices");
    if (!provenance.empty() && static_cast<int>(provenance.size()) != n)
        throw ValidationError("provenance list length must match vertex count");
    if (provenance.empty()) provenance.assign(n, std::nullopt);

    Rational area2 = signed_area_twice(vertices);
    if (sgn(area2) == 0) throw ValidationError("polygon has zero area");
    if (sgn(area2) < 0) {
        // CW input: re-orient.  Side i of the reversed list is original
        // side (n-2-i) mod n.
        std::reverse(vertices.begin(), vertices.end());
        Provenance rev(n);
        for (int i = 0; i < n; ++i) rev[i] = provenance[((n - 2 - i) % n + n) % n];
        provenance = std::move(rev);
    }

    int min_idx = 0;
    for (int i = 1; i < n; ++i)
        if (lex_less(vertices[i], vertices[min_idx])) min_idx = i;
    std::rotate(vertices.begin(), vertices.begin() + min_idx, vertices.end());
    std::rotate(provenance.begin(), provenance.begin() + min_idx, provenance.end());

    // Strict convexity: the normalized list must equal its own strict hull
    // (which monotone chain emits CCW from the lexicographic minimum).
    std::vector<Point2> hull = strict_hull(vertices);
    if (hull != vertices)
        throw ValidationError("polygon is not strictly convex");

    vertices_ = std::move(vertices);
    provenance_ = std::move(provenance);

    bbox_ = {vertices_[0].x, vertices_[0].y, vertices_[0].x, vertices_[0].y};
    for (const Point2& p : vertices_) {
        if (p.x < bbox_.min_x) bbox_.min_x = p.x;
        if (p.x > bbox_.max_x) bbox_.max_x = p.x;
        if (p.y < bbox_.min_y) bbox_.min_y = p.y;
        if (p.y > bbox_.max_y) bbox_.max_y = p.y;
    }
}

DirectedLine ConvexPolygon::side_line(int i) const {
    return DirectedLine::through(vertex(i), vertex(i + 1));
}

HalfPlane ConvexPolygon::inner_halfplane(int i) const {
    DirectedLine l = side_line(i);
    // Only the side's two endpoints can lie on its line, so vertex i+2 has a
    // strict sign.
    int s = l.residual_sign(vertex(i + 2));
    return {l, s < 0 ? Side::Left : Side::Right};
}

HalfPlane ConvexPolygon::outer_halfplane(int i) const {
    return inner_halfplane(i).opposite();
}

ConvexPolygon ConvexPolygon::with_self_provenance(int owner) const {
    ConvexPolygon copy = *this;
    for (int i = 0; i < copy.size(); ++i) copy.provenance_[i] = SideId{owner, i};
    return copy;
}

bool ConvexPolygon::contains(const Point2& p) const {
    int n = size();
    for (int i = 0; i < n; ++i)
        if (orientation(vertices_[i], vertices_[(i + 1) % n], p) ==
            Orientation::Clockwise)
            return false;
    return true;
}

Rational ConvexPolygon::area() const {
    return signed_area_twice(vertices_) / 2;
}

bool polygon_in_halfplane(const ConvexPolygon& P, const HalfPlane& h) {
    for (const Point2& v : P.vertices())
        if (!h.contains(v)) return false;
    return true;
}

bool interiors_intersect(const ConvexPolygon& P, const ConvexPolygon& Q) {
    if (P.bbox().disjoint(Q.bbox())) return false;
    for (int i = 0; i < P.size(); ++i)
        if (polygon_in_halfplane(Q, P.outer_halfplane(i))) return false;
    for (int i = 0; i < Q.size(); ++i)
        if (polygon_in_halfplane(P, Q.outer_halfplane(i))) return false;
    return true;
}

namespace {

Rational line_residual(const DirectedLine& l, const Point2& p) {
    return Rational(l.a) * p.x + Rational(l.b) * p.y - Rational(l.c);
}

}  // namespace

std::optional<ConvexPolygon> clip_polygon(const ConvexPolygon& P, const HalfPlane& h) {
    int n = P.size();
    // Work with residuals oriented so "inside the halfplane" is <= 0.
    int flip = h.side == Side::Left ? 1 : -1;
    std::vector<int> s(n);
    bool any_inside_strict = false, all_inside = true;
    for (int i = 0; i < n; ++i) {
        s[i] = flip * h.line.residual_sign(P.vertex(i));
        if (s[i] < 0) any_inside_strict = true;
        if (s[i] > 0) all_inside = false;
    }
    if (all_inside) return P;
    if (!any_inside_strict) return std::nullopt;

    std::vector<Point2> out;
    ConvexPolygon::Provenance prov;
    auto emit = [&](Point2 p, std::optional<SideId> id) {
        if (!out.empty() && out.back() == p) return;
        out.push_back(std::move(p));
        prov.push_back(id);
    };

    for (int i = 0; i < n; ++i) {
        const Point2& p = P.vertex(i);
        const Point2& q = P.vertex(i + 1);
        const auto& id = P.side_provenance(i);
        if (s[i] <= 0) {
            if (s[(i + 1) % n] > 0) {
                // leaving: keep p, then the exit point which starts the cut
                // side (no provenance until a caller assigns one)
                emit(p, id);
                if (s[i] < 0) {
                    Rational rp = line_residual(h.line, p);
                    Rational rq = line_residual(h.line, q);
                    Rational t = rp / (rp - rq);
                    emit({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)}, std::nullopt);
                } else {
                    // p is on the line; the cut side starts at p itself
                    prov.back() = std::nullopt;
                }
            } else {
                emit(p, id);
            }
        } else if (s[(i + 1) % n] < 0) {
            // entering: the entry point starts the surviving part of side i
            Rational rp = line_residual(h.line, p);
            Rational rq = line_residual(h.line, q);
            Rational t = rp / (rp - rq);
            emit({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)}, id);
        }
    }

    if (out.size() >= 2 && out.front() == out.back()) {
        out.pop_back();
        prov.pop_back();
    }

    // Merge collinear runs so the result is strictly convex again.
    bool changed = true;
    while (changed && out.size() >= 3) {
        changed = false;
        int m = static_cast<int>(out.size());
        for (int i = 0; i < m; ++i) {
            const Point2& a = out[(i + m - 1) % m];
            const Point2& b = out[i];
            const Point2& c = out[(i + 1) % m];
            if (orientation(a, b, c) == Orientation::Collinear) {
                // the side leaving `a` absorbs `b`; keep its provenance
                out.erase(out.begin() + i);
                prov.erase(prov.begin() + i);
                changed = true;
                break;
            }
        }
    }
    if (out.size() < 3) return std::nullopt;
    return ConvexPolygon(std::move(out), std::move(prov));
}

std::optional<Point2> line_intersection(const DirectedLine& l, const DirectedLine& m) {
    Integer det = l.a * m.b - m.a * l.b;
    if (sgn(det) == 0) return std::nullopt;
    Rational x(l.c * m.b - m.c * l.b, det);
    Rational y(l.a * m.c - m.a * l.c, det);
    x.canonicalize();
    y.canonicalize();
    return Point2{x, y};
}

DirectedLine nudged_line(const DirectedLine& l, const Rational& delta, int direction) {
    Rational c = Rational(l.c) + (direction >= 0 ? delta : Rational(-delta));
    return DirectedLine(Rational(l.a), Rational(l.b), c);
}

DirectedLine rotated_about_midpoint(const Point2& p, const Point2& q,
                                    const Rational& eta, int direction) {
    Point2 mid{(p.x + q.x) / 2, (p.y + q.y) / 2};
    Rational dx = q.x - p.x, dy = q.y - p.y;
    // normal of the base line, tilted against the edge direction
    Rational step = (direction >= 0 ? eta : Rational(-eta));
    Rational ax = -dy - step * dx;
    Rational ay = dx - step * dy;
    return DirectedLine(ax, ay, ax * mid.x + ay * mid.y);
}

std::optional<Rational> safe_nudge_magnitude(const DirectedLine& l,
                                             std::span<const Point2> points) {
    std::optional<Rational> best;
    for (const Point2& v : points) {
        if (l.residual_sign(v) == 0) continue;
        Rational r = rational_abs(line_residual(l, v));
        if (!best || r < *best) best = r;
    }
    if (!best) return std::nullopt;
    return *best / 2;
}

std::optional<Rational> safe_rotation_magnitude(const Point2& p, const Point2& q,
                                                std::span<const Point2> points) {
    Point2 mid{(p.x + q.x) / 2, (p.y + q.y) / 2};
    Rational dx = q.x - p.x, dy = q.y - p.y;
    std::optional<Rational> best;
    for (const Point2& v : points) {
        Rational wx = v.x - mid.x, wy = v.y - mid.y;
        Rational r0 = -dy * wx + dx * wy;  // base-line residual
        Rational s = dx * wx + dy * wy;    // drift per unit tilt
        if (sgn(r0) == 0 || sgn(s) == 0) continue;
        Rational bound = rational_abs(r0 / s);
        if (!best || bound < *best) best = bound;
    }
    if (!best) return std::nullopt;
    return *best / 2;
}

}  // namespace sepline
