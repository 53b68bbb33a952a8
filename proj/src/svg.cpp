#include "sepline/svg.hpp"

#include <algorithm>
#include <sstream>

#include "sepline/errors.hpp"

namespace sepline {

namespace {

const char* kPalette[] = {"#7fb3d5", "#a9dfbf", "#f9e79f", "#d7bde2",
                          "#f5cba7", "#aed6f1", "#abebc6", "#fad7a0"};
constexpr int kPaletteSize = 8;

std::string dec(const Rational& q) { return rational_to_decimal(q, 30); }

struct Viewport {
    Rational min_x, min_y, max_x, max_y;

    Rational width() const { return max_x - min_x; }
    Rational height() const { return max_y - min_y; }
    // SVG y grows downward; flip about the viewport's horizontal midline.
    Rational flip_y(const Rational& y) const { return max_y + min_y - y; }
};

void grow(Viewport& box, const ConvexPolygon& poly, bool& first) {
    const auto& b = poly.bbox();
    if (first) {
        box = {b.min_x, b.min_y, b.max_x, b.max_y};
        first = false;
        return;
    }
    if (b.min_x < box.min_x) box.min_x = b.min_x;
    if (b.min_y < box.min_y) box.min_y = b.min_y;
    if (b.max_x > box.max_x) box.max_x = b.max_x;
    if (b.max_y > box.max_y) box.max_y = b.max_y;
}

void emit_polygon(std::ostringstream& out, const ConvexPolygon& poly,
                  const Viewport& vp, const std::string& attrs) {
    out << "  <polygon points=\"";
    bool first = true;
    for (const Point2& v : poly.vertices()) {
        if (!first) out << ' ';
        out << dec(v.x) << ',' << dec(vp.flip_y(v.y));
        first = false;
    }
    out << "\" " << attrs << "/>\n";
}

/// Chord of the line across the viewport rectangle, or nullopt when the
/// line misses it.
std::optional<std::pair<Point2, Point2>> clip_line_to_box(const DirectedLine& l,
                                                          const Viewport& vp) {
    std::vector<Point2> hits;
    auto push_unique = [&](const Point2& p) {
        for (const Point2& q : hits)
            if (q == p) return;
        hits.push_back(p);
    };
    Rational A(l.a), B(l.b), C(l.c);
    if (sgn(B) != 0) {
        for (const Rational& x : {vp.min_x, vp.max_x}) {
            Rational y = (C - A * x) / B;
            if (y >= vp.min_y && y <= vp.max_y) push_unique({x, y});
        }
    }
    if (sgn(A) != 0) {
        for (const Rational& y : {vp.min_y, vp.max_y}) {
            Rational x = (C - B * y) / A;
            if (x >= vp.min_x && x <= vp.max_x) push_unique({x, y});
        }
    }
    if (hits.size() < 2) return std::nullopt;
    return std::make_pair(hits.front(), hits.back());
}

}  // namespace

std::string render_svg(const Instance& inst,
                       const std::optional<CertificateDoc>& certificate,
                       const std::vector<ConvexPolygon>& cover,
                       const RenderStyle& style) {
    if (style.padding && sgn(*style.padding) < 0)
        throw ValidationError("render padding must be >= 0");

    Viewport vp{0, 0, 1, 1};
    bool first = true;
    for (const ConvexPolygon& p : inst.sets) grow(vp, p, first);
    for (const ConvexPolygon& p : cover) grow(vp, p, first);
    if (first) throw ValidationError("nothing to render");

    Rational extent = std::max(vp.width(), vp.height(), std::less<Rational>());
    Rational pad = style.padding ? *style.padding : Rational(extent / 10);
    if (sgn(pad) == 0 && sgn(extent) == 0) pad = 1;
    vp.min_x -= pad;
    vp.min_y -= pad;
    vp.max_x += pad;
    vp.max_y += pad;

    Rational base_stroke = vp.width() / 300;
    Rational set_stroke = style.set_stroke.value_or(base_stroke);
    Rational cover_stroke = style.cover_stroke.value_or(base_stroke);
    Rational line_stroke = style.line_stroke.value_or(Rational(base_stroke * 2));

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << dec(vp.min_x) << ' ' << dec(vp.min_y) << ' ' << dec(vp.width()) << ' '
        << dec(vp.height()) << "\">\n";

    std::vector<bool> highlighted(inst.sets.size(), false);
    if (certificate)
        for (int k : certificate->separated)
            if (k >= 0 && k < static_cast<int>(highlighted.size())) highlighted[k] = true;

    for (int k = 0; k < static_cast<int>(inst.sets.size()); ++k) {
        const char* fill =
            kPalette[((k + style.palette_offset) % kPaletteSize + kPaletteSize) %
                     kPaletteSize];
        std::string attrs = "fill=\"" + std::string(fill) + "\" stroke=\"#333333\"";
        if (highlighted[k])
            attrs = "fill=\"#f1948a\" stroke=\"#922b21\"";
        if (certificate && (k == certificate->first || k == certificate->second))
            attrs += " stroke-width=\"" + dec(Rational(set_stroke * 3)) + "\"";
        else
            attrs += " stroke-width=\"" + dec(set_stroke) + "\"";
        emit_polygon(out, inst.sets[k], vp, attrs);
    }

    for (const ConvexPolygon& p : cover)
        emit_polygon(out, p, vp,
                     "fill=\"none\" stroke=\"#117a65\" stroke-width=\"" +
                         dec(cover_stroke) + "\" stroke-dasharray=\"" +
                         dec(Rational(cover_stroke * 4)) + "\"");

    if (certificate) {
        if (auto chord = clip_line_to_box(certificate->witness_line, vp)) {
            out << "  <line x1=\"" << dec(chord->first.x) << "\" y1=\""
                << dec(vp.flip_y(chord->first.y)) << "\" x2=\"" << dec(chord->second.x)
                << "\" y2=\"" << dec(vp.flip_y(chord->second.y))
                << "\" stroke=\"#c0392b\" stroke-width=\"" << dec(line_stroke)
                << "\"/>\n";
        }
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace sepline
