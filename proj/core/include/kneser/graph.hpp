#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kneser/bits.hpp"

namespace kneser {

// Simple undirected graph on vertices 0..m-1 with an adjacency-row bitset per
// vertex. Optional payloads record where a vertex came from: the hyperedge it
// represents (Kneser graphs) or its coordinates in a categorical product.
struct Graph {
    int m = 0;
    std::vector<Bits> adj;
    std::vector<std::uint64_t> edge_labels;     // per vertex, when built from a hypergraph
    std::vector<std::vector<int>> tuple_labels; // per vertex, when built as a product

    Graph() = default;
    explicit Graph(int m_) : m(m_), adj(m_, Bits(m_)) {}

    void add_edge(int u, int v) {
        adj[u].set(v);
        adj[v].set(u);
    }
    bool adjacent(int u, int v) const { return adj[u].test(v); }
    int degree(int v) const { return adj[v].count(); }
    long edge_count() const;

    std::string to_json_string() const;
    static Graph from_json_string(const std::string& text);
};

// Proper coloring candidate: color[v] in [1..t] for each vertex.
struct Coloring {
    int t = 0;
    std::vector<int> color;

    bool proper_on(const Graph& g) const;
    bool surjective() const;
    // Colors appear in first-use order along the vertex order: vertex 0 has
    // color 1 and each new color extends the range by exactly one.
    bool canonical() const;

    std::string to_json_string() const;
    static Coloring from_json_string(const std::string& text);
};

} // namespace kneser
