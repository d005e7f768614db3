#pragma once

#include <utility>
#include <vector>

#include "kneser/graph.hpp"
#include "kneser/hypergraph.hpp"
#include "kneser/rng.hpp"

namespace kneser {

// General Kneser graph: one vertex per hyperedge, adjacency = disjointness.
// Vertex i carries edge_labels[i] = the originating edge mask.
Graph kneser_graph(const Hypergraph& h);

// Categorical product: vertices are tuples (row-major over the factor vertex
// ranges, first factor most significant), adjacent when adjacent in every
// coordinate. Vertex i carries tuple_labels[i]. A single factor is returned
// unchanged apart from the tuple labels.
Graph categorical_product(const std::vector<Graph>& factors);

// All k-subsets of [n].
Hypergraph complete_uniform(int n, int k);

// Optimal proper coloring of the Kneser graph of complete_uniform(n, k):
// a k-subset S gets color min(min(S), n - 2k + 2). Uses n - 2k + 2 colors
// when n >= 2k, one color otherwise. Vertex order matches kneser_graph.
Coloring kneser_min_coloring(int n, int k);

// Union of three families on [n+m]: the k-subsets of [n], the pairs {i, j}
// with i in [n] and j in [n+m]\[n], and the k-subsets of [n+m]\[n].
// Requires n >= 2k-1, k >= 2, m >= 1.
Hypergraph f_nmk(int n, int m, int k);

// Partition-matroid bases restricted to size k: parts of the given sizes
// partition [n] contiguously, and edges are the k-subsets A with
// |A & U_i| <= caps[i]. Requires |U_i| != 2*caps[i], caps[i] >= 1, k >= 2.
// Also reports whether the family contains two disjoint edges.
std::pair<Hypergraph, bool> partition_matroid(const std::vector<int>& part_sizes,
                                              const std::vector<int>& caps, int k);

// Erdos-Renyi style graph with at least one edge (resampled otherwise).
Graph random_graph(int m, double edge_prob, Rng& rng);

// 2-uniform hypergraph carrying the edges of g, vertex v <-> v+1.
Hypergraph edge_hypergraph(const Graph& g);

} // namespace kneser
