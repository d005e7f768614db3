#pragma once

#include <functional>
#include <vector>

#include "kneser/graph.hpp"
#include "kneser/rng.hpp"

namespace kneser {

struct ChromaticResult {
    int chi = 0;
    Coloring witness;
};

// Exact chromatic number. Branch and bound: greedy clique lower bound,
// DSATUR upper bound, then k-colorability backtracking with the clique
// pre-colored and first-use color symmetry breaking. Ties broken by vertex
// index throughout, so the witness is deterministic.
ChromaticResult chromatic_number(const Graph& g);

// Is g colorable with at most k colors (exact decision)?
bool k_colorable(const Graph& g, int k);

// Streams every canonical proper coloring of g that uses exactly t colors.
// Canonical means colors are numbered by first use along the vertex order,
// so each coloring stands for its whole color-permutation class. Vertices
// are assigned in index order; the callback returns false to stop early.
void for_each_canonical_coloring(const Graph& g, int t,
                                 const std::function<bool(const Coloring&)>& f);

// Convenience: collect all canonical t-colorings (use only when the count is
// known to be small).
std::vector<Coloring> all_canonical_colorings(const Graph& g, int t);

// Seeded random proper coloring with exactly t colors (surjective), found by
// backtracking with random tie-breaks, forward checking, and restarts.
// Deterministic for a fixed rng state. Requires t <= 32.
Coloring sample_coloring(const Graph& g, int t, Rng& rng);

} // namespace kneser
