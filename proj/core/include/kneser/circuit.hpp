#pragma once

#include <vector>

#include <kneser/fan.hpp>

namespace kneser {

// Maximal chain of nonzero sign vectors, stored as sv_encode codes in
// ascending support order (support sizes 1..n).
using MaximalChain = std::vector<std::size_t>;

struct FanCircuit {
    std::vector<MaximalChain> chains; // cyclic order around the circuit
    std::vector<bool> alternating;    // per chain: labels fully alternating
    int alternating_count = 0;
};

// A maximal chain is alternating when its labels have distinct magnitudes
// and alternate in sign once sorted by magnitude; it is almost-alternating
// when it is not alternating but one of its facets (the chain minus one
// element) is. On the graph whose vertices are these chains, with edges
// joining two chains that share an alternating facet, every vertex has
// degree exactly two, so the graph splits into vertex-disjoint circuits.
// Returns a circuit mapped to itself by global negation; it contains at
// least two alternating chains. Both structural guarantees are checked and
// a ClaimFailure reports any violation.
FanCircuit fan_symmetric_circuit(const FanLabeling& l);

} // namespace kneser
