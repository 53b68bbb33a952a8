#pragma once

#include <string>
#include <vector>

#include "sepline/instances.hpp"
#include "sepline/pipeline.hpp"

namespace sepline {

/// File-facing view of a solved certificate.  Indices are 0-based in
/// memory and 1-based in the JSON documents.
struct CertificateDoc {
    std::string instance_hash;
    int first = 0;
    int second = 0;
    int guarantee = 0;
    DirectedLine witness_line;
    std::vector<int> separated;
};

CertificateDoc make_certificate_doc(const Instance& inst, const TheoremCertificate& cert);

/// Canonical JSON bytes for a certificate (deterministic).
std::string serialize_certificate(const CertificateDoc& doc);

/// Throws ParseError on malformed documents.
CertificateDoc parse_certificate(const std::string& bytes);

/// Auxiliary emission for figure regeneration: the bounding triangle, the
/// clipped family with side sources, and the grown cover.
std::string serialize_solve_trace(const Instance& inst, const SolveTrace& trace);

/// Reads back the polygon layers of a solve-trace file.
struct TraceLayers {
    std::vector<ConvexPolygon> clipped;
    std::vector<ConvexPolygon> cover;
};
TraceLayers parse_solve_trace(const std::string& bytes);

}  // namespace sepline
