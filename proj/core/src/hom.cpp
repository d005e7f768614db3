#include "kneser/hom.hpp"

#include <algorithm>
#include <bit>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

constexpr int kGraphCap = 20;
constexpr std::size_t kElementCap = 50000;

template <typename F>
void enumerate(const Graph& g, F&& take) {
    std::vector<std::uint64_t> adj_mask(g.m, 0);
    for (int v = 0; v < g.m; ++v)
        g.adj[v].for_each([&](int u) { adj_mask[v] |= 1ULL << u; });
    std::uint64_t full = (g.m == 64) ? ~0ULL : (1ULL << g.m) - 1;
    for (std::uint64_t a = 1; a <= full; ++a) {
        std::uint64_t common = full;
        std::uint64_t m = a;
        while (m && common) {
            common &= adj_mask[std::countr_zero(m)];
            m &= m - 1;
        }
        if (!common) continue;
        // Nonempty subsets of the common neighborhood.
        std::uint64_t b = common;
        while (b) {
            take(a, b);
            b = (b - 1) & common;
        }
    }
}

} // namespace

int HomK2::find(std::uint64_t a, std::uint64_t b) const {
    auto key = std::make_pair(a, b);
    auto it = std::lower_bound(elements.begin(), elements.end(), key);
    if (it == elements.end() || *it != key) return -1;
    return static_cast<int>(it - elements.begin());
}

std::size_t hom_k2_count(const Graph& g) {
    if (g.m > kGraphCap)
        throw CapExceeded("hom_k2: more than " + std::to_string(kGraphCap) +
                          " vertices");
    std::size_t count = 0;
    enumerate(g, [&](std::uint64_t, std::uint64_t) { ++count; });
    return count;
}

HomK2 hom_k2(const Graph& g) {
    if (g.m > kGraphCap)
        throw CapExceeded("hom_k2: more than " + std::to_string(kGraphCap) +
                          " vertices");
    HomK2 hom;
    enumerate(g, [&](std::uint64_t a, std::uint64_t b) {
        hom.elements.emplace_back(a, b);
        if (hom.elements.size() > kElementCap)
            throw CapExceeded("hom_k2: more than " +
                              std::to_string(kElementCap) + " elements");
    });
    std::sort(hom.elements.begin(), hom.elements.end());

    int n = static_cast<int>(hom.elements.size());
    std::vector<int> nu(n);
    for (int i = 0; i < n; ++i) {
        nu[i] = hom.find(hom.elements[i].second, hom.elements[i].first);
        if (nu[i] < 0)
            throw ClaimFailure("hom_k2: mirror element missing");
    }
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            auto [ai, bi] = hom.elements[i];
            auto [aj, bj] = hom.elements[j];
            if ((ai & ~aj) == 0 && (bi & ~bj) == 0) rel.emplace_back(i, j);
        }
    hom.poset = FreeZ2Poset::from_relations(n, std::move(nu), rel);
    return hom;
}

} // namespace kneser
