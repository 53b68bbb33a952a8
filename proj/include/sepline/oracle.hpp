#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "sepline/certificate_io.hpp"
#include "sepline/instances.hpp"
#include "sepline/pipeline.hpp"

namespace sepline {

/// Outcome of brute-force certificate verification.
struct VerificationReport {
    std::string instance_hash;
    int claimed_guarantee = 0;
    long long lines_checked = 0;
    int min_observed_max = -1;
    bool pass = false;
    std::optional<std::pair<DirectedLine, SideCounts>> counterexample;
};

/// Re-derives the certificate's claim from scratch: enumerates the full
/// candidate family of the instance with its own loop (sharing only the
/// exact geometric primitives with the solver) and checks that every line
/// weakly separating the chosen pair leaves at least `guarantee` sets on
/// one closed side, and that guarantee >= ceil(n/18).
/// Throws HashMismatchError when the certificate belongs to another
/// instance, ValidationError on out-of-range pair indices.
VerificationReport verify_certificate(const Instance& inst, const CertificateDoc& cert,
                                      int threads = 1);

/// Minimum over all enumerated candidate lines weakly separating sets i and
/// j of max(left, right); the independent mirror of minmax_separating_line.
int exhaustive_minmax(const Instance& inst, int i, int j, int threads = 1);

struct SamplingResult {
    int accepted = 0;
    int min_observed_max = -1;
};

/// Samples random exact-rational lines through the corridor between sets i
/// and j, keeps those weakly separating them, and reports the smallest
/// max(left, right) observed.
SamplingResult sampled_minmax(const Instance& inst, int i, int j, int samples,
                              std::uint64_t seed);

}  // namespace sepline
