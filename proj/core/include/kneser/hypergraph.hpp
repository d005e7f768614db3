#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kneser {

// Hypergraph on vertex set [1..n], n <= 64. Edges are stored as bitmasks
// (vertex v <-> bit v-1), kept in lexicographic order of their ascending
// vertex lists and free of duplicates. Edge index is vertex identity in the
// general Kneser graph, so the canonical order is part of the contract.
struct Hypergraph {
    int n = 0;
    std::vector<std::uint64_t> edges;

    static Hypergraph create(int n, const std::vector<std::vector<int>>& edge_lists);
    static Hypergraph from_masks(int n, std::vector<std::uint64_t> masks);

    bool empty() const { return edges.empty(); }
    bool has_singleton() const;

    std::vector<int> edge_vertices(int e) const;

    std::string to_json_string() const;
    static Hypergraph from_json_string(const std::string& text);
};

} // namespace kneser
