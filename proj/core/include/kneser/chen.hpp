#pragma once

#include <cstdint>
#include <vector>

#include <kneser/fan.hpp>
#include <kneser/sign_vector.hpp>

namespace kneser {

// Pair of maximal chains of nonzero sign vectors produced by the flip
// construction. Positions are 1-based: xs[i-1] has support size i and label
// (-1)^i * i; ys matches the same pattern except at position gamma, where
// ys[gamma-1] is the negation of xs[gamma-1].
struct ChainPair {
    std::vector<std::size_t> xs, ys; // sv_encode codes, ascending support
    int gamma = 0;
    std::size_t z = 0;               // xs[gamma-1]
};

// `labels` is indexed by sv_encode over {+,-,0}^n and must define an
// antipodal order-preserving map with nonzero values of magnitude at most n,
// such that no comparable pair carries two labels of magnitude gamma.
// Returns chains through a common antipodal pair at position gamma.
ChainPair chen_chain_pair(int n, const std::vector<int>& labels, int gamma);

// Same construction on a labeling into its own dimension (m = n required).
ChainPair chen_chain_pair(const FanLabeling& l, int gamma);

// Replays the invariants of a chain pair against the original labels.
bool chain_pair_valid(int n, const std::vector<int>& labels, int gamma,
                      const ChainPair& cp);

// Number of maximal chains x1 < ... < xn with labels[xi] = (-1)^i * i,
// computed by dynamic programming over support sizes. Shares the input
// contract of chen_chain_pair except that no gamma property is needed.
std::uint64_t count_aligned_chains(int n, const std::vector<int>& labels);

} // namespace kneser
