#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepline/certificate_io.hpp"
#include "sepline/instances.hpp"

namespace sepline {

struct RenderStyle {
    std::optional<Rational> padding;      // >= 0; default 10% of the larger extent
    std::optional<Rational> set_stroke;   // stroke widths; default scaled to size
    std::optional<Rational> cover_stroke;
    std::optional<Rational> line_stroke;
    int palette_offset = 0;
};

/// SVG 1.1 document: input sets filled, optional cover polygons outlined,
/// optional witness line drawn across the viewport with the separated sets
/// highlighted.  Rational coordinates are emitted as 30-significant-digit
/// decimals; nothing else in the toolchain converts to decimal.
/// Throws ValidationError on a negative padding.
std::string render_svg(const Instance& inst,
                       const std::optional<CertificateDoc>& certificate,
                       const std::vector<ConvexPolygon>& cover,
                       const RenderStyle& style = {});

}  // namespace sepline
