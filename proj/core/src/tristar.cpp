#include "kneser/tristar.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

constexpr int kVertexCap = 20;

void check_caps(const Graph& g, const char* who) {
    if (g.m > kVertexCap)
        throw CapExceeded(std::string(who) + ": more than " +
                          std::to_string(kVertexCap) + " vertices");
    if (g.edge_count() > 64)
        throw CapExceeded(std::string(who) + ": more than 64 edges");
}

struct EdgeIds {
    std::vector<std::pair<int, int>> list; // u < v, ascending
    std::vector<std::vector<int>> id;      // id[u][v], -1 when absent

    explicit EdgeIds(const Graph& g) : id(g.m, std::vector<int>(g.m, -1)) {
        for (int u = 0; u < g.m; ++u)
            g.adj[u].for_each([&](int v) {
                if (u < v) {
                    id[u][v] = id[v][u] = static_cast<int>(list.size());
                    list.emplace_back(u, v);
                }
            });
    }
};

// covered[C] = mask of edges met by vertex set C; subsets listed by size so a
// linear scan finds a minimum cover.
struct CoverTable {
    std::vector<std::uint64_t> covered;
    std::vector<std::uint32_t> by_size;

    CoverTable(const Graph& g, const EdgeIds& eids) {
        int m = g.m;
        std::vector<std::uint64_t> incident(m, 0);
        for (std::size_t e = 0; e < eids.list.size(); ++e) {
            incident[eids.list[e].first] |= 1ULL << e;
            incident[eids.list[e].second] |= 1ULL << e;
        }
        std::size_t total = std::size_t(1) << m;
        covered.assign(total, 0);
        for (std::size_t c = 1; c < total; ++c) {
            int v = std::countr_zero(c);
            covered[c] = covered[c & (c - 1)] | incident[v];
        }
        by_size.resize(total);
        std::iota(by_size.begin(), by_size.end(), 0);
        std::stable_sort(by_size.begin(), by_size.end(),
                         [](std::uint32_t a, std::uint32_t b) {
                             return std::popcount(a) < std::popcount(b);
                         });
    }

    std::uint32_t min_cover(std::uint64_t edge_mask) const {
        for (std::uint32_t c : by_size)
            if ((edge_mask & ~covered[c]) == 0) return c;
        return 0; // unreachable: the full vertex set covers everything
    }
};

std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> tris;
    for (int a = 0; a < g.m; ++a)
        for (int b = a + 1; b < g.m; ++b) {
            if (!g.adjacent(a, b)) continue;
            for (int c = b + 1; c < g.m; ++c)
                if (g.adjacent(a, c) && g.adjacent(b, c))
                    tris.push_back({a, b, c});
        }
    return tris;
}

struct Search {
    const CoverTable& table;
    std::uint64_t all_edges;
    std::vector<std::uint64_t> tri_edges;
    std::vector<std::uint64_t> tri_verts;

    Search(const CoverTable& t, std::uint64_t all) : table(t), all_edges(all) {}

    int best = 0;

    void find_best(int i, std::uint64_t used, int k) {
        int here = k + std::popcount(table.min_cover(all_edges & ~used));
        best = std::min(best, here);
        if (k + 1 >= best) return;
        for (int j = i; j < static_cast<int>(tri_edges.size()); ++j) {
            if (tri_edges[j] & used) continue;
            find_best(j + 1, used | tri_edges[j], k + 1);
        }
    }

    // Statistics over optimal collections, gathered in a second sweep.
    int min_k = -1, max_k = -1;
    std::vector<int> min_k_pick;
    bool disjoint = false;
    std::vector<int> disjoint_pick;
    std::vector<int> pick;

    void collect(int i, std::uint64_t used, std::uint64_t verts, bool vd, int k) {
        int here = k + std::popcount(table.min_cover(all_edges & ~used));
        if (here == best) {
            if (min_k < 0 || k < min_k) {
                min_k = k;
                min_k_pick = pick;
            }
            max_k = std::max(max_k, k);
            if (!disjoint && vd && k >= 1) {
                disjoint = true;
                disjoint_pick = pick;
            }
        }
        if (k + 1 > best) return;
        for (int j = i; j < static_cast<int>(tri_edges.size()); ++j) {
            if (tri_edges[j] & used) continue;
            pick.push_back(j);
            collect(j + 1, used | tri_edges[j], verts | tri_verts[j],
                    vd && !(verts & tri_verts[j]), k + 1);
            pick.pop_back();
        }
    }
};

TriStarPartition build_partition(const Graph& g, const EdgeIds& eids,
                                 const CoverTable& table,
                                 const std::vector<std::array<int, 3>>& tris,
                                 const std::vector<int>& chosen,
                                 std::uint64_t all_edges) {
    TriStarPartition part;
    std::uint64_t used = 0;
    for (int t : chosen) {
        auto [a, b, c] = tris[t];
        part.triangles.push_back(tris[t]);
        used |= (1ULL << eids.id[a][b]) | (1ULL << eids.id[a][c]) |
                (1ULL << eids.id[b][c]);
    }
    std::uint64_t rest = all_edges & ~used;
    std::uint32_t cover = table.min_cover(rest);
    std::vector<std::vector<std::pair<int, int>>> star_edges(g.m);
    std::uint64_t m = rest;
    while (m) {
        int e = std::countr_zero(m);
        m &= m - 1;
        auto [u, v] = eids.list[e];
        int center;
        if (((cover >> u) & 1) && ((cover >> v) & 1)) center = std::min(u, v);
        else if ((cover >> u) & 1) center = u;
        else center = v;
        star_edges[center].emplace_back(u, v);
    }
    for (int c = 0; c < g.m; ++c) {
        if (!((cover >> c) & 1)) continue;
        if (star_edges[c].empty())
            throw ClaimFailure("triangle_star_partitions: a minimum-cover "
                               "center received no edges");
        part.stars.emplace_back(c, star_edges[c]);
    }
    return part;
}

} // namespace

std::uint64_t min_vertex_cover(const Graph& g) {
    check_caps(g, "min_vertex_cover");
    EdgeIds eids(g);
    CoverTable table(g, eids);
    std::uint64_t all = eids.list.empty()
                            ? 0
                            : (eids.list.size() == 64
                                   ? ~0ULL
                                   : (1ULL << eids.list.size()) - 1);
    return table.min_cover(all);
}

TriStarResult triangle_star_partitions(const Graph& g) {
    check_caps(g, "triangle_star_partitions");
    TriStarResult res;
    EdgeIds eids(g);
    if (eids.list.empty()) return res;
    CoverTable table(g, eids);
    auto tris = all_triangles(g);

    Search s(table,
             eids.list.size() == 64 ? ~0ULL : (1ULL << eids.list.size()) - 1);
    for (const auto& t : tris) {
        auto [a, b, c] = t;
        s.tri_edges.push_back((1ULL << eids.id[a][b]) | (1ULL << eids.id[a][c]) |
                              (1ULL << eids.id[b][c]));
        s.tri_verts.push_back((1ULL << a) | (1ULL << b) | (1ULL << c));
    }
    s.best = std::popcount(table.min_cover(s.all_edges));
    s.find_best(0, 0, 0);
    s.collect(0, 0, 0, true, 0);

    res.parts = s.best;
    res.min_triangles = s.min_k;
    res.max_triangles = s.max_k;
    res.witness =
        build_partition(g, eids, table, tris, s.min_k_pick, s.all_edges);
    res.disjoint_optimum = s.disjoint;
    if (s.disjoint)
        res.disjoint_witness =
            build_partition(g, eids, table, tris, s.disjoint_pick, s.all_edges);
    return res;
}

bool partition_valid(const Graph& g, const TriStarPartition& p) {
    EdgeIds eids(g);
    std::uint64_t seen = 0;
    auto take = [&](int u, int v) {
        if (u < 0 || v < 0 || u >= g.m || v >= g.m || u == v) return false;
        int e = eids.id[std::min(u, v)][std::max(u, v)];
        if (e < 0 || ((seen >> e) & 1)) return false;
        seen |= 1ULL << e;
        return true;
    };
    for (const auto& [a, b, c] : p.triangles)
        if (!take(a, b) || !take(a, c) || !take(b, c)) return false;
    for (const auto& [center, edges] : p.stars) {
        if (edges.empty()) return false;
        for (const auto& [u, v] : edges) {
            if (u != center && v != center) return false;
            if (!take(u, v)) return false;
        }
    }
    return std::popcount(seen) == g.edge_count();
}

bool cycles_covered(const Graph& g, const TriStarPartition& p) {
    check_caps(g, "cycles_covered");
    std::vector<std::uint64_t> tri_sets;
    for (const auto& [a, b, c] : p.triangles)
        tri_sets.push_back((1ULL << a) | (1ULL << b) | (1ULL << c));
    EdgeIds eids(g);
    std::uint64_t star_mask = 0;
    for (const auto& [center, edges] : p.stars)
        for (const auto& [u, v] : edges)
            star_mask |= 1ULL << eids.id[std::min(u, v)][std::max(u, v)];

    // Walk simple cycles once each: smallest vertex first, and the neighbor
    // chosen at the start is smaller than the one that closes the cycle.
    bool ok = true;
    std::vector<int> path;
    std::function<void(int, int, std::uint64_t, std::uint64_t)> dfs =
        [&](int start, int v, std::uint64_t visited, std::uint64_t cyc_edges) {
            if (!ok) return;
            g.adj[v].for_each([&](int u) {
                if (!ok) return;
                int e = eids.id[std::min(u, v)][std::max(u, v)];
                if (u == start && path.size() >= 3) {
                    if (path[1] < v) {
                        std::uint64_t edges = cyc_edges | (1ULL << e);
                        std::uint64_t verts = visited;
                        bool is_triangle =
                            path.size() == 3 &&
                            std::find(tri_sets.begin(), tri_sets.end(), verts) !=
                                tri_sets.end();
                        if (!is_triangle && !(edges & star_mask)) ok = false;
                    }
                    return;
                }
                if (u <= start || ((visited >> u) & 1)) return;
                path.push_back(u);
                dfs(start, u, visited | (1ULL << u), cyc_edges | (1ULL << e));
                path.pop_back();
            });
        };
    for (int s = 0; s < g.m && ok; ++s) {
        path.assign(1, s);
        dfs(s, s, 1ULL << s, 0);
    }
    return ok;
}

} // namespace kneser
