#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kneser/bits.hpp"

namespace kneser {

// Finite poset with a fixed-point-free order-preserving involution. The
// strict order is stored as a dense predecessor matrix, so construction is
// capped at 20000 elements.
struct FreeZ2Poset {
    int size = 0;
    std::vector<int> nu;      // partner of each element
    std::vector<Bits> below;  // below[p] = strict predecessors of p
    std::vector<int> height;  // longest chain ending at p, counted from 0

    bool less(int a, int b) const { return below[b].test(a); }
    int levels() const;

    // Elements sorted by height, ties by index; every strict predecessor of
    // an element appears before it.
    std::vector<int> topo_order() const;

    // Builds from strict relations (a,b) meaning a < b; the transitive
    // closure is taken. Rejects cycles, reflexive pairs, bad involutions, and
    // elements comparable with their own partner.
    static FreeZ2Poset from_relations(int size, std::vector<int> nu,
                                      const std::vector<std::pair<int, int>>& rel);

    // {"size": n, "nu": [...], "less": [[a,b],...]} with 1-based indices.
    static FreeZ2Poset from_json_string(const std::string& text);
    std::string to_json_string() const;
};

// Free simplicial Z2-complex given by generating faces (the downward closure
// is taken). Vertices are 0-based; nu is the involution on vertices.
struct Z2Complex {
    int vertices = 0;
    std::vector<int> nu;
    std::vector<std::vector<int>> faces;
};

// Face poset of the closure: one element per nonempty face, ordered by
// inclusion, involution induced by the vertex involution.
struct FacePoset {
    FreeZ2Poset poset;
    std::vector<std::uint64_t> face_masks; // index-aligned with the poset
};

FacePoset face_poset(const Z2Complex& k);

} // namespace kneser
