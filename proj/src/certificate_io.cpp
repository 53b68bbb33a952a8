#include "sepline/certificate_io.hpp"

#include <json.hpp>

#include "sepline/errors.hpp"

namespace sepline {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

ordered_json polygon_to_json(const ConvexPolygon& poly, bool with_sources) {
    ordered_json verts = ordered_json::array();
    for (const Point2& v : poly.vertices())
        verts.push_back({rational_to_string(v.x), rational_to_string(v.y)});
    ordered_json out{{"vertices", std::move(verts)}};
    if (with_sources) {
        ordered_json sources = ordered_json::array();
        for (int s = 0; s < poly.size(); ++s) {
            const auto& id = poly.side_provenance(s);
            if (id)
                sources.push_back({id->owner, id->side});
            else
                sources.push_back(nullptr);
        }
        out["side_sources"] = std::move(sources);
    }
    return out;
}

std::vector<ConvexPolygon> polygons_from_json(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw ParseError(where + " must be an array");
    std::vector<ConvexPolygon> out;
    for (const json& poly : arr) {
        if (!poly.is_object() || !poly.contains("vertices"))
            throw ParseError(where + " entries need a \"vertices\" array");
        std::vector<Point2> verts;
        for (const json& v : poly["vertices"]) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
                throw ParseError(where + " vertices must be [\"x\", \"y\"] pairs");
            verts.push_back({rational_from_string(v[0].get<std::string>()),
                             rational_from_string(v[1].get<std::string>())});
        }
        out.emplace_back(std::move(verts));
    }
    return out;
}

}  // namespace

CertificateDoc make_certificate_doc(const Instance& inst, const TheoremCertificate& cert) {
    CertificateDoc doc;
    doc.instance_hash = instance_digest(inst);
    doc.first = cert.first;
    doc.second = cert.second;
    doc.guarantee = cert.guarantee;
    doc.witness_line = cert.witness.line;
    doc.separated = cert.separated_by_witness;
    return doc;
}

std::string serialize_certificate(const CertificateDoc& doc) {
    ordered_json j;
    j["instance_hash"] = doc.instance_hash;
    j["pair"] = {doc.first + 1, doc.second + 1};
    j["guarantee"] = doc.guarantee;
    j["witness_line"] = ordered_json{{"a", doc.witness_line.a.get_str()},
                                     {"b", doc.witness_line.b.get_str()},
                                     {"c", doc.witness_line.c.get_str()}};
    ordered_json separated = ordered_json::array();
    for (int k : doc.separated) separated.push_back(k + 1);
    j["separated"] = std::move(separated);
    return j.dump(2) + "\n";
}

CertificateDoc parse_certificate(const std::string& bytes) {
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw ParseError("invalid certificate JSON: " + std::string(e.what()));
    }
    if (!j.is_object() || !j.contains("instance_hash") || !j.contains("pair") ||
        !j.contains("guarantee") || !j.contains("witness_line"))
        throw ParseError("certificate document is missing required fields");
    if (!j["pair"].is_array() || j["pair"].size() != 2 ||
        !j["pair"][0].is_number_integer() || !j["pair"][1].is_number_integer())
        throw ParseError("certificate \"pair\" must be two integers");
    if (!j["guarantee"].is_number_integer())
        throw ParseError("certificate \"guarantee\" must be an integer");

    CertificateDoc doc;
    doc.instance_hash = j["instance_hash"].get<std::string>();
    doc.first = j["pair"][0].get<int>() - 1;
    doc.second = j["pair"][1].get<int>() - 1;
    doc.guarantee = j["guarantee"].get<int>();
    const json& w = j["witness_line"];
    if (!w.is_object() || !w.contains("a") || !w.contains("b") || !w.contains("c"))
        throw ParseError("certificate \"witness_line\" needs a, b, c");
    doc.witness_line =
        DirectedLine(rational_from_string(w["a"].get<std::string>()),
                     rational_from_string(w["b"].get<std::string>()),
                     rational_from_string(w["c"].get<std::string>()));
    if (j.contains("separated")) {
        for (const json& k : j["separated"]) {
            if (!k.is_number_integer())
                throw ParseError("certificate \"separated\" must hold integers");
            doc.separated.push_back(k.get<int>() - 1);
        }
    }
    return doc;
}

std::string serialize_solve_trace(const Instance& inst, const SolveTrace& trace) {
    ordered_json j;
    j["instance_hash"] = instance_digest(inst);
    j["bounding_triangle"] = polygon_to_json(trace.bounding, false);
    ordered_json clipped = ordered_json::array();
    for (const ConvexPolygon& p : trace.certificate.clipped_family)
        clipped.push_back(polygon_to_json(p, true));
    j["clipped"] = std::move(clipped);
    ordered_json cover = ordered_json::array();
    if (trace.cover_of_clipped)
        for (const ConvexPolygon& p : trace.cover_of_clipped->polygons)
            cover.push_back(polygon_to_json(p, true));
    j["cover"] = std::move(cover);
    return j.dump(2) + "\n";
}

TraceLayers parse_solve_trace(const std::string& bytes) {
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw ParseError("invalid trace JSON: " + std::string(e.what()));
    }
    TraceLayers layers;
    if (j.contains("clipped")) layers.clipped = polygons_from_json(j["clipped"], "clipped");
    if (j.contains("cover")) layers.cover = polygons_from_json(j["cover"], "cover");
    return layers;
}

}  // namespace sepline
