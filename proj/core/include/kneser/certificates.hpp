#pragma once

#include <cstdint>
#include <string>

namespace kneser {

// Certificates are self-contained JSON envelopes
//   {"invariant": ..., "params": {...}, "value": ..., "witness": ...,
//    "seed": ...}
// where params carries the instance (graph, hypergraph, labeling, ...)
// inline, so a certificate can be re-validated with no other files at hand.
//
// check_certificate replays the claim: witnesses are validated from the raw
// instance data, and claimed values are recomputed with the same solvers
// where that is feasible at certificate scale (chi, chic, cd2, alt, nice,
// xind, circuit, fan-count, tristar). Campaign reports ("verify") are
// checked for shape and for the zero-failures claim.

// Assembles an envelope. Every *_json argument must already be serialized
// JSON; pass "null" for a missing value or witness.
std::string make_certificate(const std::string& invariant,
                             const std::string& params_json,
                             const std::string& value_json,
                             const std::string& witness_json,
                             std::uint64_t seed);

struct CheckOutcome {
    bool ok = false;
    std::string reason; // names the violated contract when not ok
};

// Re-validates a certificate from its own content. Malformed envelopes
// throw InvalidInput; instances beyond a solver cap throw CapExceeded;
// a well-formed certificate whose claim fails replay comes back ok=false.
CheckOutcome check_certificate(const std::string& envelope_json);

} // namespace kneser
