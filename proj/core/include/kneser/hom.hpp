#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kneser/graph.hpp"
#include "kneser/z2poset.hpp"

namespace kneser {

// The poset Hom(K2, g): pairs (A, B) of nonempty disjoint vertex sets with
// every A-B pair adjacent, ordered by componentwise inclusion; the involution
// swaps the sides. Elements are index-aligned with the poset and listed by
// (A, B) mask value.
struct HomK2 {
    FreeZ2Poset poset;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> elements;

    int find(std::uint64_t a, std::uint64_t b) const; // -1 when absent
};

HomK2 hom_k2(const Graph& g);

// Element count alone, without building the order matrix.
std::size_t hom_k2_count(const Graph& g);

} // namespace kneser
