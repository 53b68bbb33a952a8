#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sepline/rational.hpp"

namespace sepline {

enum class Orientation { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };
enum class Side { Left = -1, On = 0, Right = 1 };

struct Point2 {
    Rational x;
    Rational y;

    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point2& o) const { return !(*this == o); }
};

/// Lexicographic (x, y) order; used only for canonical vertex rotation.
bool lex_less(const Point2& a, const Point2& b);

/// Sign of the exact cross product (q - p) x (r - p).
Orientation orientation(const Point2& p, const Point2& q, const Point2& r);

/// A line a*x + b*y = c stored in canonical form: integer coefficients with
/// content 1 and the first nonzero of (a, b) positive.  The canonical form
/// makes lines usable as multiset keys; the LEFT halfplane is
/// a*x + b*y <= c, RIGHT is a*x + b*y >= c.
struct DirectedLine {
    Integer a;
    Integer b;
    Integer c;

    DirectedLine() : a(0), b(1), c(0) {}
    /// Canonicalizes arbitrary rational coefficients; (a, b) != (0, 0).
    DirectedLine(const Rational& a_, const Rational& b_, const Rational& c_);

    /// Line through two distinct points.  Throws ValidationError on p == q.
    static DirectedLine through(const Point2& p, const Point2& q);

    /// Sign of a*p.x + b*p.y - c: -1, 0 or +1.
    int residual_sign(const Point2& p) const;
    Side side_of(const Point2& p) const;

    Rational a_rational() const { return Rational(a); }
    Rational b_rational() const { return Rational(b); }
    Rational c_rational() const { return Rational(c); }

    bool operator==(const DirectedLine& o) const {
        return a == o.a && b == o.b && c == o.c;
    }
    bool operator!=(const DirectedLine& o) const { return !(*this == o); }
    /// Lexicographic on (a, b, c); the canonical line ordering.
    bool operator<(const DirectedLine& o) const;

    std::string to_string() const;
};

/// One closed halfplane of a line.  `side` must be Left or Right.
struct HalfPlane {
    DirectedLine line;
    Side side = Side::Left;

    bool contains(const Point2& p) const {
        int s = line.residual_sign(p);
        return side == Side::Left ? s <= 0 : s >= 0;
    }
    HalfPlane opposite() const {
        return {line, side == Side::Left ? Side::Right : Side::Left};
    }
};

/// Identifies a side of a polygon: (polygon index, side index).
struct SideId {
    int owner = 0;
    int side = 0;

    bool operator==(const SideId& o) const {
        return owner == o.owner && side == o.side;
    }
};

/// Strictly convex polygon with CCW vertices.  Construction normalizes:
/// CW input is reversed, and the vertex list is rotated so the
/// lexicographically smallest vertex comes first (stable side indexing and
/// byte-identical serialization).  Side i runs from vertex i to vertex i+1.
class ConvexPolygon {
public:
    using Provenance = std::vector<std::optional<SideId>>;

    /// Throws ValidationError unless the input is strictly convex with at
    /// least 3 vertices (no repeated or collinear consecutive triples).
    explicit ConvexPolygon(std::vector<Point2> vertices, Provenance provenance = {});

    int size() const { return static_cast<int>(vertices_.size()); }
    const Point2& vertex(int i) const { return vertices_[wrap(i)]; }
    const std::vector<Point2>& vertices() const { return vertices_; }

    /// Canonical supporting line of side i (from vertex i to vertex i+1).
    DirectedLine side_line(int i) const;
    /// The closed halfplane of side i's line that contains the polygon.
    HalfPlane inner_halfplane(int i) const;
    /// The closed halfplane of side i's line away from the polygon.
    HalfPlane outer_halfplane(int i) const;

    const std::optional<SideId>& side_provenance(int i) const {
        return provenance_[wrap(i)];
    }
    void set_side_provenance(int i, std::optional<SideId> id) {
        provenance_[wrap(i)] = id;
    }
    /// Copy with provenance (owner, s) on every side s.
    ConvexPolygon with_self_provenance(int owner) const;

    /// Closed containment.
    bool contains(const Point2& p) const;
    Rational area() const;

    struct BBox {
        Rational min_x, min_y, max_x, max_y;
        bool disjoint(const BBox& o) const {
            return max_x < o.min_x || o.max_x < min_x || max_y < o.min_y ||
                   o.max_y < min_y;
        }
    };
    const BBox& bbox() const { return bbox_; }

    bool operator==(const ConvexPolygon& o) const { return vertices_ == o.vertices_; }

private:
    int wrap(int i) const {
        int n = size();
        return ((i % n) + n) % n;
    }

    std::vector<Point2> vertices_;
    Provenance provenance_;
    BBox bbox_;
};

/// True iff every vertex of P satisfies the closed halfplane inequality.
bool polygon_in_halfplane(const ConvexPolygon& P, const HalfPlane& h);

/// Exact open-interior intersection test (separating axis over both edge
/// normal sets: interiors are disjoint iff some edge line weakly separates).
bool interiors_intersect(const ConvexPolygon& P, const ConvexPolygon& Q);

/// Exact intersection P with a closed halfplane; collinear vertices merged;
/// sides cut by h.line get empty provenance.  nullopt when the intersection
/// has empty interior.
std::optional<ConvexPolygon> clip_polygon(const ConvexPolygon& P, const HalfPlane& h);

/// Intersection point of two non-parallel lines.
std::optional<Point2> line_intersection(const DirectedLine& l, const DirectedLine& m);

/// Candidate-line perturbation primitives.  `nudged_line` shifts the
/// residual level by +/- delta (a translation along the normal direction);
/// `rotated_about_midpoint` tilts the line through p and q about their
/// midpoint.  The magnitude helpers return the largest exactly-safe step:
/// any smaller positive step leaves every strict vertex sign unchanged.
DirectedLine nudged_line(const DirectedLine& l, const Rational& delta, int direction);
DirectedLine rotated_about_midpoint(const Point2& p, const Point2& q,
                                    const Rational& eta, int direction);
std::optional<Rational> safe_nudge_magnitude(const DirectedLine& l,
                                             std::span<const Point2> points);
std::optional<Rational> safe_rotation_magnitude(const Point2& p, const Point2& q,
                                                std::span<const Point2> points);

}  // namespace sepline
