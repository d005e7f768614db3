#pragma once

#include <cstdint>
#include <vector>

#include "kneser/graph.hpp"
#include "kneser/hom.hpp"

namespace kneser {

// Complete bipartite subgraph with the colors of I on side a and the colors
// of J on side b, one vertex per color.
struct ColorfulKlm {
    std::vector<int> side_a;
    std::vector<int> side_b;
    std::vector<int> colors_a; // colors_a[i] is the color of side_a[i]
    std::vector<int> colors_b;
    // The chain of nested complete bipartite pairs behind the extraction,
    // bottom to top; empty for degenerate bipartitions or brute-force finds.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> chain;
};

// Checks the witness against the graph and coloring: sides disjoint,
// complete bipartite, each side heterochromatic with exactly the demanded
// colors.
bool colorful_klm_valid(const Graph& g, const Coloring& c,
                        const std::vector<int>& color_side_i,
                        const std::vector<int>& color_side_j,
                        const ColorfulKlm& w);

// Constructive extraction for a surjective proper t-coloring and a
// bipartition (I, J) of the colors {1..t}: builds the ladder map
// (A,B) -> +-(max color), walks a prescribed alternating chain in
// Hom(K2, g), and reads the witness off the chain's top. Succeeds whenever
// t - 2 equals the cross-index of Hom(K2, g); otherwise the chain step may
// throw ClaimFailure. An empty I or J yields the degenerate one-sided
// witness (one vertex per color).
ColorfulKlm colorful_klm_extract(const Graph& g, const Coloring& c,
                                 const std::vector<int>& color_side_i,
                                 const std::vector<int>& color_side_j,
                                 const HomK2& hom);

} // namespace kneser
