#pragma once

#include <cstdint>
#include <vector>

#include "kneser/z2poset.hpp"

namespace kneser {

// Equivariant order-preserving map into the ladder Q_s, whose elements are
// +-1..+-(s+1) with x < y exactly when |x| < |y|. label[p] is the signed
// image of element p.
struct LadderMap {
    int s = 0;
    std::vector<int> label;
};

bool ladder_map_valid(const FreeZ2Poset& p, const LadderMap& m);

struct CompressionResult {
    int upper = -1; // cross-index is at most this
    LadderMap map;
};

// Upper bound on the cross-index: fix the sign of each element by its orbit
// (+ on the smaller index), then give every element the length of the
// longest sign-alternating chain ending there. The result is always a valid
// ladder map.
CompressionResult xind_upper(const FreeZ2Poset& p);

struct XindResult {
    int lower = -1;
    int upper = -1;
    bool exact = false;
    LadderMap witness;        // map achieving `upper`
    std::uint64_t nodes = 0;  // search nodes spent
};

// Exact cross-index by descending from the compression bound: for each
// candidate s, a backtracking search over orbit signs decides whether some
// equivariant sign choice keeps every alternating chain within s+1 levels.
// When the node budget runs out the result is the bracket [lower, upper]
// with exact = false.
XindResult xind_exact(const FreeZ2Poset& p, std::uint64_t budget = 50000000);

// Is there a ladder map into Q_s? `complete` reports whether the search ran
// to exhaustion; a a positive answer fills `out` when given.
bool ladder_feasible(const FreeZ2Poset& p, int s, std::uint64_t budget,
                     bool& complete, std::uint64_t& nodes, LadderMap* out);

// Longest chain whose labels alternate in sign under a valid ladder map,
// as ascending poset indices. Deterministic tie-breaks.
std::vector<int> longest_alternating_chain(const FreeZ2Poset& p,
                                           const LadderMap& phi);

// Chain p_1 < ... < p_{s+1} with phi(p_i) = eps[i-1] * i, which exists for
// every sign pattern eps whenever phi.s equals the cross-index of p. Throws
// ClaimFailure when no such chain exists.
std::vector<int> prescribed_alternating_chain(const FreeZ2Poset& p,
                                              const LadderMap& phi,
                                              const std::vector<int>& eps);

// Longest alternating chain of faces for an antipodal, complementary-edge-
// free labeling of a free simplicial Z2-complex: each face is sent to its
// largest-magnitude vertex label and the chain alternates in sign. The
// returned faces are vertex masks, ascending along the chain; the last one is
// the alternating simplex.
std::vector<std::uint64_t> alternating_simplex_chain(
    const Z2Complex& k, const std::vector<int>& labels);

} // namespace kneser
