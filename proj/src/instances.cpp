#include "sepline/instances.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

#include "sepline/errors.hpp"

namespace sepline {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

long long rand_range(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Strict hull, CCW; empty when the points are degenerate.
std::vector<Point2> hull_of(std::vector<Point2> pts) {
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

Instance random_disjoint_polygons(int n, std::uint64_t seed,
                                  const GeneratorParams& params) {
    if (n < 1) throw ValidationError("need n >= 1");
    if (params.k_min < 3 || params.k_max < params.k_min)
        throw ValidationError("side-count range must satisfy 3 <= k_min <= k_max");
    if (sgn(params.spread) <= 0) throw ValidationError("spread must be positive");
    if (sgn(params.min_gap) < 0) throw ValidationError("min_gap must be >= 0");

    constexpr long long kCell = 1000;
    constexpr long long kJitter = kCell / 10;

    // Confining each polygon to a disk inside its cell guarantees the gap;
    // the margin is measured in lattice units before the spread scaling.
    Rational margin_units = params.min_gap / (2 * params.spread);
    Integer margin_int;
    mpz_cdiv_q(margin_int.get_mpz_t(), margin_units.get_num().get_mpz_t(),
               margin_units.get_den().get_mpz_t());
    if (!margin_int.fits_slong_p())
        throw GenerationError("min_gap too large for the layout");
    long long margin = std::max(0L, margin_int.get_si());
    long long radius = kCell / 2 - kJitter - margin - 1;
    if (radius < 40)
        throw GenerationError("cell too crowded: shrink min_gap or raise spread");

    std::mt19937_64 rng(seed);
    int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));

    Instance inst;
    inst.seed = static_cast<long long>(seed);
    inst.label = params.label.empty()
                     ? "rand-n" + std::to_string(n) + "-seed" + std::to_string(seed)
                     : params.label;

    for (int idx = 0; idx < n; ++idx) {
        long long cx = (idx % cols) * kCell + kCell / 2 + rand_range(rng, -kJitter, kJitter);
        long long cy = (idx / cols) * kCell + kCell / 2 + rand_range(rng, -kJitter, kJitter);

        bool placed = false;
        for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
            int target = static_cast<int>(
                rand_range(rng, params.k_min, params.k_max));
            // Sampling from an annulus keeps most points on the hull.
            long long r_in = radius * 4 / 5;
            std::vector<Point2> pts;
            pts.reserve(target);
            while (static_cast<int>(pts.size()) < target) {
                long long x = rand_range(rng, -radius, radius);
                long long y = rand_range(rng, -radius, radius);
                long long d2 = x * x + y * y;
                if (d2 > radius * radius || d2 < r_in * r_in) continue;
                pts.push_back({Rational(static_cast<long>(cx + x)),
                               Rational(static_cast<long>(cy + y))});
            }
            std::vector<Point2> hull = hull_of(std::move(pts));
            int h = static_cast<int>(hull.size());
            if (h < params.k_min || h > params.k_max) continue;
            if (params.spread != 1)
                for (Point2& p : hull) {
                    p.x *= params.spread;
                    p.y *= params.spread;
                }
            inst.sets.emplace_back(std::move(hull));
            placed = true;
        }
        if (!placed)
            throw GenerationError("could not place polygon " + std::to_string(idx) +
                                  " within the retry budget");
    }
    return inst;
}

InstanceCheck validate_instance(const Instance& inst) {
    int n = inst.size();
    if (n < 1) return {false, "instance has no sets"};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (interiors_intersect(inst.sets[i], inst.sets[j]))
                return {false, "sets " + std::to_string(i) + " and " +
                                   std::to_string(j) + " have overlapping interiors"};
    return {true, ""};
}

std::string serialize_instance(const Instance& inst) {
    ordered_json doc;
    doc["label"] = inst.label;
    if (inst.seed)
        doc["seed"] = *inst.seed;
    else
        doc["seed"] = nullptr;
    ordered_json sets = ordered_json::array();
    for (const ConvexPolygon& poly : inst.sets) {
        ordered_json verts = ordered_json::array();
        for (const Point2& v : poly.vertices())
            verts.push_back({rational_to_string(v.x), rational_to_string(v.y)});
        sets.push_back(ordered_json{{"vertices", std::move(verts)}});
    }
    doc["sets"] = std::move(sets);
    return doc.dump(2) + "\n";
}

namespace {

void byte_to_line_col(const std::string& bytes, std::size_t byte, int& line, int& col) {
    line = 1;
    col = 1;
    for (std::size_t i = 0; i < byte && i < bytes.size(); ++i) {
        if (bytes[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
}

Rational coordinate_from_json(const json& v, const std::string& where) {
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_number_float())
        throw ParseError("floating-point coordinate at " + where +
                         "; use exact \"p/q\" strings");
    throw ParseError("coordinate at " + where + " must be a rational string");
}

}  // namespace

Instance parse_instance(const std::string& bytes) {
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
        int line, col;
        byte_to_line_col(bytes, e.byte > 0 ? e.byte - 1 : 0, line, col);
        throw ParseError("invalid JSON: " + std::string(e.what()), line, col);
    }
    if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
    if (!doc.contains("sets") || !doc["sets"].is_array())
        throw ParseError("instance document needs a \"sets\" array");

    Instance inst;
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) throw ParseError("\"label\" must be a string");
        inst.label = doc["label"].get<std::string>();
    }
    if (doc.contains("seed") && !doc["seed"].is_null()) {
        if (!doc["seed"].is_number_integer())
            throw ParseError("\"seed\" must be an integer or null");
        inst.seed = doc["seed"].get<long long>();
    }

    int set_idx = 0;
    for (const json& set : doc["sets"]) {
        std::string where = "sets[" + std::to_string(set_idx) + "]";
        if (!set.is_object() || !set.contains("vertices") || !set["vertices"].is_array())
            throw ParseError(where + " needs a \"vertices\" array");
        std::vector<Point2> verts;
        int v_idx = 0;
        for (const json& vertex : set["vertices"]) {
            std::string vwhere = where + ".vertices[" + std::to_string(v_idx) + "]";
            if (!vertex.is_array() || vertex.size() != 2)
                throw ParseError(vwhere + " must be a [x, y] pair");
            verts.push_back({coordinate_from_json(vertex[0], vwhere),
                             coordinate_from_json(vertex[1], vwhere)});
            ++v_idx;
        }
        try {
            inst.sets.emplace_back(std::move(verts));
        } catch (const ValidationError& e) {
            throw ValidationError(where + ": " + e.what());
        }
        ++set_idx;
    }

    InstanceCheck check = validate_instance(inst);
    if (!check.ok) throw ValidationError(check.message);
    return inst;
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    EVP_DigestUpdate(ctx, bytes.data(), bytes.size());
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

std::string instance_digest(const Instance& inst) {
    return sha256_hex(serialize_instance(inst));
}

}  // namespace sepline
