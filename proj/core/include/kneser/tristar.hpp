#pragma once

#include <array>
#include <utility>
#include <vector>

#include "kneser/graph.hpp"

namespace kneser {

// Partition of a graph's edge set into triangles and stars. Each star is a
// center together with the edges assigned to it (all incident to the center).
struct TriStarPartition {
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> stars;

    int parts() const {
        return static_cast<int>(triangles.size() + stars.size());
    }
};

struct TriStarResult {
    int parts = 0;                // minimum over all triangle/star partitions
    TriStarPartition witness;     // optimal, with the fewest triangles
    int min_triangles = 0;        // triangle counts attained by optimal
    int max_triangles = 0;        //   partitions
    bool disjoint_optimum = false; // some optimal partition has >= 1 triangle,
                                   // all pairwise vertex-disjoint
    TriStarPartition disjoint_witness; // only meaningful when disjoint_optimum
};

// Minimum triangle/star partition, found by enumerating edge-disjoint
// triangle collections and covering the leftover edges with stars centered on
// a minimum vertex cover. Independent of the coloring solver. Needs <= 20
// vertices.
TriStarResult triangle_star_partitions(const Graph& g);

// Exact minimum vertex cover as a vertex mask (lexicographically first of
// minimum size). Needs <= 20 vertices.
std::uint64_t min_vertex_cover(const Graph& g);

// Do the parts use only edges of g, cover every edge exactly once, and have
// the right shape (triangles are triangles, star edges meet their center)?
bool partition_valid(const Graph& g, const TriStarPartition& p);

// Is every simple cycle of g either one of the triangles or a cycle through
// at least one star edge?
bool cycles_covered(const Graph& g, const TriStarPartition& p);

} // namespace kneser
