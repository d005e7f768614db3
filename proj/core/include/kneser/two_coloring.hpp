#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kneser/hypergraph.hpp"

namespace kneser {

// Two-coloring of the vertex set with no monochromatic edge, if one exists.
// Returned as the set of vertices on the first side (the rest are on the
// second); isolated vertices land on the first side.
std::optional<std::uint64_t> find_2_coloring(const Hypergraph& h);

inline bool is_2_colorable(const Hypergraph& h) { return find_2_coloring(h).has_value(); }

struct DefectWitness {
    int value = 0;
    std::uint64_t removed = 0;       // vertices deleted
    std::uint64_t first_side = 0;    // 2-coloring of the rest (edges avoiding `removed`)
};

// 2-colorability defect: minimum number of vertices whose deletion (together
// with every edge meeting them) leaves a 2-colorable hypergraph. Searches
// removal sets by increasing size, lexicographic within a size.
DefectWitness cd2(const Hypergraph& h);

} // namespace kneser
