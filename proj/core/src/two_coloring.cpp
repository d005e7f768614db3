#include "kneser/two_coloring.hpp"

#include <functional>

#include "kneser/bits.hpp"

namespace kneser {

namespace {

using u64 = std::uint64_t;

struct TwoColorSearch {
    int n;
    const std::vector<u64>& edges;
    std::vector<std::vector<int>> edges_at; // vertex -> incident edge indices
    u64 pos = 0, neg = 0, assigned = 0;

    TwoColorSearch(int n_, const std::vector<u64>& es) : n(n_), edges(es), edges_at(n + 1) {
        for (std::size_t e = 0; e < edges.size(); ++e)
            for (int v = 1; v <= n; ++v)
                if (edges[e] & mask_bit(v)) edges_at[v].push_back(int(e));
    }

    // Color v, then force the last vertex of any edge that is otherwise
    // monochromatic. Returns false on a monochromatic edge; on success the
    // assignment state reflects all propagated decisions.
    bool assign(int v, bool positive, std::vector<int>& trail) {
        std::vector<int> queue{positive ? v : -v};
        while (!queue.empty()) {
            int signed_v = queue.back();
            queue.pop_back();
            int u = signed_v > 0 ? signed_v : -signed_v;
            u64 bit = mask_bit(u);
            u64& mine = signed_v > 0 ? pos : neg;
            u64& other = signed_v > 0 ? neg : pos;
            if (other & bit) return false;
            if (mine & bit) continue;
            mine |= bit;
            assigned |= bit;
            trail.push_back(u);
            for (int e : edges_at[u]) {
                u64 em = edges[e];
                if (em & (signed_v > 0 ? neg : pos)) continue; // already split
                u64 open = em & ~assigned;
                if (open == 0) return false; // fully one color
                if ((open & (open - 1)) == 0) {
                    int w = std::countr_zero(open) + 1;
                    queue.push_back(signed_v > 0 ? -w : w);
                }
            }
        }
        return true;
    }

    void undo(std::vector<int>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            u64 bit = mask_bit(trail.back());
            trail.pop_back();
            pos &= ~bit;
            neg &= ~bit;
            assigned &= ~bit;
        }
    }

    bool solve(std::vector<int>& trail) {
        int v = 0;
        for (int u = 1; u <= n; ++u)
            if (!(assigned & mask_bit(u)) && !edges_at[u].empty()) {
                v = u;
                break;
            }
        if (v == 0) return true; // only isolated vertices left
        for (bool positive : {true, false}) {
            std::size_t mark = trail.size();
            if (assign(v, positive, trail) && solve(trail)) return true;
            undo(trail, mark);
        }
        return false;
    }
};

} // namespace

std::optional<std::uint64_t> find_2_coloring(const Hypergraph& h) {
    if (h.has_singleton()) return std::nullopt;
    TwoColorSearch search(h.n, h.edges);
    std::vector<int> trail;
    if (!search.solve(trail)) return std::nullopt;
    u64 all = h.n == 64 ? ~u64(0) : (u64(1) << h.n) - 1;
    u64 first = search.pos | (all & ~search.assigned); // isolated vertices join side one
    return first;
}

namespace {

std::optional<std::uint64_t> two_color_after_removal(const Hypergraph& h, std::uint64_t removed) {
    std::vector<std::uint64_t> kept;
    for (std::uint64_t e : h.edges)
        if ((e & removed) == 0) kept.push_back(e);
    Hypergraph rest;
    rest.n = h.n;
    rest.edges = std::move(kept);
    auto side = find_2_coloring(rest);
    if (!side) return std::nullopt;
    return *side & ~removed;
}

} // namespace

DefectWitness cd2(const Hypergraph& h) {
    std::vector<int> verts(h.n);
    for (int v = 1; v <= h.n; ++v) verts[v - 1] = v;
    for (int size = 0; size <= h.n; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::uint64_t removed = 0;
            for (int i : idx) removed |= mask_bit(verts[i]);
            if (auto side = two_color_after_removal(h, removed))
                return {size, removed, *side};
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && idx[i] == h.n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    // Removing every vertex always leaves the 2-colorable empty hypergraph.
    return {h.n, h.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << h.n) - 1, 0};
}

} // namespace kneser
