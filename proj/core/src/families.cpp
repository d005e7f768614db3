#include "kneser/families.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "kneser/bits.hpp"
#include "kneser/errors.hpp"

namespace kneser {

Graph kneser_graph(const Hypergraph& h) {
    int m = int(h.edges.size());
    Graph g(m);
    g.edge_labels = h.edges;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if ((h.edges[a] & h.edges[b]) == 0) g.add_edge(a, b);
    return g;
}

Graph categorical_product(const std::vector<Graph>& factors) {
    if (factors.empty()) throw InvalidInput("product: needs at least one factor");
    long total = 1;
    for (const auto& f : factors) {
        if (f.m == 0) throw InvalidInput("product: empty factor");
        total *= f.m;
        if (total > 2'000'000) throw CapExceeded("product: more than 2e6 vertices");
    }
    int s = int(factors.size());
    int m = int(total);
    Graph g(m);
    g.tuple_labels.assign(m, std::vector<int>(s, 0));
    for (int v = 0; v < m; ++v) {
        int rest = v;
        for (int j = s - 1; j >= 0; --j) {
            g.tuple_labels[v][j] = rest % factors[j].m;
            rest /= factors[j].m;
        }
    }
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) {
            bool adj = true;
            for (int j = 0; j < s && adj; ++j)
                adj = factors[j].adjacent(g.tuple_labels[u][j], g.tuple_labels[v][j]);
            if (adj) g.add_edge(u, v);
        }
    return g;
}

namespace {

void foreach_ksubset(std::uint64_t pool, int k, const std::function<void(std::uint64_t)>& emit) {
    std::vector<int> elems;
    for (int v = 1; v <= 64; ++v)
        if (pool & mask_bit(v)) elems.push_back(v);
    int n = int(elems.size());
    if (k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint64_t m = 0;
        for (int i : idx) m |= mask_bit(elems[i]);
        emit(m);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

Hypergraph complete_uniform(int n, int k) {
    if (k < 1) throw InvalidInput("complete_uniform: k must be >= 1");
    if (k > n) throw InvalidInput("complete_uniform: k must be <= n");
    if (n > 64) throw InvalidInput("complete_uniform: n must be <= 64");
    std::uint64_t pool = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    std::vector<std::uint64_t> masks;
    foreach_ksubset(pool, k, [&](std::uint64_t m) { masks.push_back(m); });
    return Hypergraph::from_masks(n, std::move(masks));
}

Coloring kneser_min_coloring(int n, int k) {
    Hypergraph h = complete_uniform(n, k);
    Coloring c;
    c.t = std::max(1, n - 2 * k + 2);
    for (std::uint64_t e : h.edges)
        c.color.push_back(std::min(std::countr_zero(e) + 1, c.t));
    return c;
}

Hypergraph f_nmk(int n, int m, int k) {
    if (k < 2) throw InvalidInput("f_nmk: k must be >= 2");
    if (n < 2 * k - 1) throw InvalidInput("f_nmk: n must be >= 2k-1");
    if (m < 1) throw InvalidInput("f_nmk: m must be >= 1");
    if (n + m > 64) throw InvalidInput("f_nmk: n+m must be <= 64");
    std::uint64_t first = (std::uint64_t(1) << n) - 1;
    std::uint64_t second = ((std::uint64_t(1) << (n + m)) - 1) & ~first;
    std::vector<std::uint64_t> masks;
    foreach_ksubset(first, k, [&](std::uint64_t mm) { masks.push_back(mm); });
    for (int i = 1; i <= n; ++i)
        for (int j = n + 1; j <= n + m; ++j) masks.push_back(mask_bit(i) | mask_bit(j));
    foreach_ksubset(second, k, [&](std::uint64_t mm) { masks.push_back(mm); });
    // The three families are pairwise disjoint, including for k = 2: each
    // cross pair meets both sides while the other families stay on one side.
    return Hypergraph::from_masks(n + m, std::move(masks));
}

std::pair<Hypergraph, bool> partition_matroid(const std::vector<int>& part_sizes,
                                              const std::vector<int>& caps, int k) {
    if (part_sizes.empty() || part_sizes.size() != caps.size())
        throw InvalidInput("partition_matroid: part_sizes and caps must align and be nonempty");
    if (k < 2) throw InvalidInput("partition_matroid: k must be >= 2");
    int n = 0;
    for (std::size_t i = 0; i < part_sizes.size(); ++i) {
        if (part_sizes[i] < 1) throw InvalidInput("partition_matroid: empty part");
        if (caps[i] < 1) throw InvalidInput("partition_matroid: caps must be >= 1");
        if (part_sizes[i] == 2 * caps[i])
            throw InvalidInput("partition_matroid: part size must differ from twice its cap");
        n += part_sizes[i];
    }
    if (n > 64) throw InvalidInput("partition_matroid: total size must be <= 64");
    std::vector<std::uint64_t> part_masks;
    int at = 1;
    for (int sz : part_sizes) {
        std::uint64_t m = 0;
        for (int v = at; v < at + sz; ++v) m |= mask_bit(v);
        part_masks.push_back(m);
        at += sz;
    }
    std::uint64_t pool = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    std::vector<std::uint64_t> masks;
    foreach_ksubset(pool, k, [&](std::uint64_t mm) {
        for (std::size_t i = 0; i < part_masks.size(); ++i)
            if (mask_count(mm & part_masks[i]) > caps[i]) return;
        masks.push_back(mm);
    });
    if (masks.empty()) throw InvalidInput("partition_matroid: no edges satisfy the caps");
    bool two_disjoint = false;
    for (std::size_t a = 0; a < masks.size() && !two_disjoint; ++a)
        for (std::size_t b = a + 1; b < masks.size() && !two_disjoint; ++b)
            two_disjoint = (masks[a] & masks[b]) == 0;
    return {Hypergraph::from_masks(n, std::move(masks)), two_disjoint};
}

Graph random_graph(int m, double edge_prob, Rng& rng) {
    if (m < 2) throw InvalidInput("random_graph: needs at least 2 vertices");
    while (true) {
        Graph g(m);
        bool any = false;
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v)
                if (rng_unit(rng) < edge_prob) {
                    g.add_edge(u, v);
                    any = true;
                }
        if (any) return g;
    }
}

Hypergraph edge_hypergraph(const Graph& g) {
    if (g.m > 64) throw InvalidInput("edge_hypergraph: graph must have <= 64 vertices");
    std::vector<std::uint64_t> masks;
    for (int u = 0; u < g.m; ++u)
        g.adj[u].for_each([&](int v) {
            if (u < v) masks.push_back(mask_bit(u + 1) | mask_bit(v + 1));
        });
    if (masks.empty()) throw InvalidInput("edge_hypergraph: graph has no edges");
    return Hypergraph::from_masks(g.m, std::move(masks));
}

} // namespace kneser
