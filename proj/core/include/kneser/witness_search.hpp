#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <kneser/graph.hpp>
#include <kneser/product_labeling.hpp>

namespace kneser {

// Two disjoint nonempty vertex sets spanning a complete bipartite subgraph.
// Vertices are listed ascending on each side.
struct BipartiteState {
    std::vector<int> a, b;
};

bool bipartite_state_valid(const Graph& g, const BipartiteState& s);

// Walk through the space of balanced almost-heterochromatic complete
// bipartite subgraphs on t vertices, ending at the start with the two sides
// interchanged. path_witness_valid spells out every requirement.
struct PathWitness {
    int t = 0;
    std::vector<BipartiteState> states;
};

// Complete bipartite subgraph on t distinct colors such that the colors,
// sorted increasingly, alternate sides: odd ranks on a, even ranks on b.
// Backtracking over vertices ordered by (color, index); the first witness in
// that order is returned, no witness gives nullopt.
std::optional<BipartiteState> find_zigzag(const Graph& g, const Coloring& c,
                                          int t);

bool zigzag_valid(const Graph& g, const Coloring& c, int t,
                  const BipartiteState& s);

// Complete bipartite subgraph with one vertex per color, colors exactly I on
// side a and exactly J on side b. I and J must be disjoint, nonempty and
// within the palette.
std::optional<BipartiteState> find_colorful_klm(const Graph& g,
                                                const Coloring& c,
                                                std::vector<int> I,
                                                std::vector<int> J);

bool colorful_klm_valid(const Graph& g, const Coloring& c,
                        const std::vector<int>& I, const std::vector<int>& J,
                        const BipartiteState& s);

// Brute-force counterpart of extract_ktt_star: 2t distinct vertices, one
// pair per color, with every cross pair of different colors adjacent.
// Backtracking over per-color pairs with adjacency pruning.
std::optional<KttStarWitness> find_ktt_star(const Graph& g, const Coloring& c,
                                            int t);

// Breadth-first search for a PathWitness: start states are heterochromatic
// with side sizes differing by at most one, intermediate states keep t
// vertices, at least t-1 colors, complete bipartite sides differing by at
// most two, and each step removes one vertex and adds one (possibly the same
// vertex on the other side). Starts are tried in (color, index) order; each
// search stops once it has seen state_cap states (CapExceeded). Graphs with
// more than 64 vertices are rejected.
inline constexpr long kDefaultPathStateCap = 2'000'000;

std::optional<PathWitness> find_path_of_subgraphs(
    const Graph& g, const Coloring& c, int t,
    long state_cap = kDefaultPathStateCap);

// Checks a PathWitness from raw graph and coloring data alone:
//   - every state is a valid BipartiteState with |a| + |b| = t, at least
//     t-1 distinct colors and ||a| - |b|| <= 2;
//   - the first state has t distinct colors and ||a| - |b|| <= 1;
//   - the last state is the first with the sides interchanged;
//   - consecutive states differ by removing exactly one vertex and adding
//     exactly one.
bool path_witness_valid(const Graph& g, const Coloring& c,
                        const PathWitness& w);

// Outcome of running a predicate over proper t-colorings. Exhaustive runs
// walk every canonical coloring with exactly t colors; sampled runs draw
// seeded random colorings instead and say so. failing keeps the first
// indices (enumeration order or sample number) where the predicate was
// false, at most 16 of them.
struct VerifyReport {
    long total = 0;
    long failures = 0;
    bool sampled = false;
    std::uint64_t seed = 0;
    std::vector<long> failing;
};

VerifyReport verify_for_all_colorings(
    const Graph& g, int t, const std::function<bool(const Coloring&)>& check);

VerifyReport verify_sampled_colorings(
    const Graph& g, int t, long samples, std::uint64_t seed,
    const std::function<bool(const Coloring&)>& check);

} // namespace kneser
