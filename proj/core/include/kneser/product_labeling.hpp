#pragma once

#include <optional>
#include <vector>

#include <kneser/chen.hpp>
#include <kneser/fan.hpp>
#include <kneser/graph.hpp>
#include <kneser/hypergraph.hpp>

namespace kneser {

// Everything the labeling-based extraction needs about a categorical product
// of general Kneser graphs: the factor hypergraphs (each nice under its own
// vertex order), their invariants, the product graph, and a proper coloring
// with t = min_j chi(KG(H_j)) colors.
struct ProductLabelingContext {
    std::vector<Hypergraph> hs;
    std::vector<int> chi;       // chromatic number of KG(hs[j])
    std::vector<int> alt;       // alternation number of hs[j], identity order
    std::vector<int> offset;    // first coordinate of block j in [0, n)
    int s = 0;                  // number of factors
    int t = 0;                  // min_j chi
    int n = 0;                  // sum of the n_j, after the parity fix
    std::vector<Graph> factors; // KG(hs[j])
    Graph product;
    Coloring coloring;

    // Validates every factor (nonempty, nice under the identity order),
    // appends an isolated dummy vertex to the first factor when n - t is odd
    // (the Kneser graphs are unchanged), builds the product, and installs the
    // supplied coloring (must be proper with t colors) or the pullback of a
    // canonical optimal coloring of the first factor attaining t.
    static ProductLabelingContext build(
        std::vector<Hypergraph> hs,
        const std::optional<Coloring>& coloring = std::nullopt);

    // x(j): the coordinates of block j.
    SignVector block(const SignVector& x, int j) const;

    // Vertex of the product from one edge index per factor (row-major, first
    // factor most significant).
    int vertex_id(const std::vector<int>& edge_indices) const;
};

// Relabels the vertices with a permutation witnessing niceness, so that the
// identity order works in ProductLabelingContext::build. The Kneser graph is
// unchanged up to renumbering its vertices (edge masks are re-sorted).
Hypergraph normalize_nice(const Hypergraph& h);

// The labeling driving the extraction, one value per nonzero sign vector of
// {+,-,0}^n. When no sign has an edge of every block inside its support
// (case one), the magnitude adds per-block contributions: the alternation of
// edge-free blocks, the support size of blocks with edges on both sides, and
// one plus the best edge-free alternation below blocks with edges on exactly
// one side; the sign is the first nonzero coordinate, or the edge side of
// the smallest one-sided block if any. Otherwise (case two) the magnitude is
// n - t plus the top color among product vertices lying inside one sign, and
// the sign tells which sign carries that top color. Requires t >= 3.
FanLabeling lambda_from_context(const ProductLabelingContext& ctx);

// Single evaluation of the same labeling, for spot checks.
int lambda_value(const ProductLabelingContext& ctx, const SignVector& x);

// Colorful K*_{t,t}: position k of each side carries color k+1, and cross
// pairs at different positions are adjacent.
struct KttStarWitness {
    int t = 0;
    std::vector<int> a_side, b_side; // product vertex ids
};

// Replays a witness against raw graph and coloring data: 2t distinct
// vertices, a_side[i] adjacent to b_side[j] for i != j, and
// c(a_side[k]) = c(b_side[k]) = k+1.
bool ktt_star_valid(const Graph& g, const Coloring& c, const KttStarWitness& w);

// Constructive extraction. For t >= 3: builds the labeling, obtains the
// chain pair at gamma = n - t, locates the distinguished block j0 and the
// sets S and T, reads the newly signed vertices a_i off the chains, picks
// the edges the niceness of the factors promises, and assembles the two
// sides. For t <= 2: direct routes from an edge-free witness of the factor
// attaining t. Every structural claim along the way is asserted; a violation
// raises ClaimFailure naming the failed step.
KttStarWitness extract_ktt_star(const ProductLabelingContext& ctx);

} // namespace kneser
