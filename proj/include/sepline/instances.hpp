#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepline/geometry.hpp"

namespace sepline {

/// A named collection of pairwise interior-disjoint convex polygons.
struct Instance {
    std::vector<ConvexPolygon> sets;
    std::optional<long long> seed;
    std::string label;

    int size() const { return static_cast<int>(sets.size()); }
};

struct GeneratorParams {
    int k_min = 3;
    int k_max = 7;
    Rational spread = 1;   // scales all coordinates
    Rational min_gap = 1;  // lower bound on the gap between any two sets
    std::string label;     // default: derived from n and seed
};

/// Deterministic seeded generator: jittered-grid placement, one convex
/// polygon per cell with integer-lattice vertices (scaled by `spread`).
/// Throws GenerationError when the parameters leave no room.
Instance random_disjoint_polygons(int n, std::uint64_t seed,
                                  const GeneratorParams& params = {});

struct InstanceCheck {
    bool ok = false;
    std::string message;
};

/// Checks what the polygon type cannot enforce: pairwise
/// interior-disjointness.  Reports the first violating pair.
InstanceCheck validate_instance(const Instance& inst);

/// Canonical JSON bytes; rationals as exact "p/q" strings, two-space
/// indent, trailing newline.  parse(serialize(x)) == x exactly.
std::string serialize_instance(const Instance& inst);

/// Parses and validates.  Throws ParseError (malformed document, bad
/// rational, floats) or ValidationError (bad polygon, overlapping sets).
Instance parse_instance(const std::string& bytes);

/// SHA-256 over the canonical serialization, lowercase hex.
std::string instance_digest(const Instance& inst);

std::string sha256_hex(const std::string& bytes);

}  // namespace sepline
