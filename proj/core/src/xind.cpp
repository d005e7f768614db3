#include "kneser/xind.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

int sgn(int x) { return x > 0 ? 1 : -1; }

} // namespace

bool ladder_map_valid(const FreeZ2Poset& p, const LadderMap& m) {
    if (static_cast<int>(m.label.size()) != p.size) return false;
    for (int v = 0; v < p.size; ++v) {
        int l = m.label[v];
        if (l == 0 || std::abs(l) > m.s + 1) return false;
        if (m.label[p.nu[v]] != -l) return false;
    }
    for (int b = 0; b < p.size; ++b) {
        bool ok = true;
        p.below[b].for_each([&](int a) {
            // a < b needs label[a] <= label[b] in the ladder: equal, or
            // strictly smaller magnitude.
            if (m.label[a] != m.label[b] &&
                std::abs(m.label[a]) >= std::abs(m.label[b]))
                ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

CompressionResult xind_upper(const FreeZ2Poset& p) {
    CompressionResult res;
    res.map.label.assign(p.size, 0);
    if (p.size == 0) {
        res.upper = -1;
        res.map.s = -1;
        return res;
    }
    std::vector<int> ell(p.size, 0);
    int top = 1;
    for (int v : p.topo_order()) {
        int sign = v < p.nu[v] ? 1 : -1;
        int l = 1;
        p.below[v].for_each([&](int w) {
            int ws = sgn(res.map.label[w]);
            l = std::max(l, ws == sign ? ell[w] : ell[w] + 1);
        });
        ell[v] = l;
        res.map.label[v] = sign * l;
        top = std::max(top, l);
    }
    res.upper = top - 1;
    res.map.s = res.upper;
    return res;
}

bool ladder_feasible(const FreeZ2Poset& p, int s, std::uint64_t budget,
                     bool& complete, std::uint64_t& nodes, LadderMap* out) {
    complete = true;
    nodes = 0;
    if (p.size == 0) {
        if (out) *out = LadderMap{s, {}};
        return true;
    }
    if (s < 0) return false;

    std::vector<int> reps;
    for (int v = 0; v < p.size; ++v)
        if (v < p.nu[v]) reps.push_back(v);
    std::stable_sort(reps.begin(), reps.end(), [&](int a, int b) {
        return p.height[a] < p.height[b];
    });

    std::vector<int> sign(p.size, 0), ell(p.size, 0);
    std::uint64_t counter = 0;
    bool out_of_budget = false;

    // Assign a sign to one orbit per level of the recursion; predecessors are
    // always already assigned because orbits are visited by height.
    std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
        if (i == reps.size()) return true;
        if (++counter > budget) {
            out_of_budget = true;
            return false;
        }
        int r = reps[i];
        int count = i == 0 ? 1 : 2; // global sign flip symmetry: root is +
        for (int k = 0; k < count; ++k) {
            int sg = k == 0 ? 1 : -1;
            int l = 1;
            p.below[r].for_each([&](int w) {
                l = std::max(l, sign[w] == sg ? ell[w] : ell[w] + 1);
            });
            if (l > s + 1) continue;
            // The partner's chains are the mirror images, same length.
            sign[r] = sg;
            sign[p.nu[r]] = -sg;
            ell[r] = ell[p.nu[r]] = l;
            if (dfs(i + 1)) return true;
            if (out_of_budget) break;
            sign[r] = sign[p.nu[r]] = 0;
            ell[r] = ell[p.nu[r]] = 0;
        }
        return false;
    };

    bool found = dfs(0);
    nodes = counter;
    if (out_of_budget) complete = false;
    if (found && out) {
        out->s = s;
        out->label.resize(p.size);
        for (int v = 0; v < p.size; ++v) out->label[v] = sign[v] * ell[v];
    }
    return found;
}

XindResult xind_exact(const FreeZ2Poset& p, std::uint64_t budget) {
    XindResult res;
    auto comp = xind_upper(p);
    res.upper = comp.upper;
    res.witness = comp.map;
    if (p.size == 0) {
        res.lower = -1;
        res.exact = true;
        return res;
    }
    res.lower = 0;
    for (int s = res.upper - 1; s >= 0; --s) {
        bool complete = false;
        std::uint64_t nodes = 0;
        LadderMap m;
        bool ok = ladder_feasible(p, s, budget, complete, nodes, &m);
        res.nodes += nodes;
        if (ok) {
            res.upper = s;
            res.witness = m;
            continue;
        }
        if (complete) res.lower = s + 1;
        break;
    }
    res.exact = res.lower == res.upper;
    return res;
}

std::vector<int> longest_alternating_chain(const FreeZ2Poset& p,
                                           const LadderMap& phi) {
    if (!ladder_map_valid(p, phi))
        throw InvalidInput("longest_alternating_chain: not a ladder map");
    std::vector<int> ell(p.size, 0), parent(p.size, -1);
    int best = -1;
    for (int v : p.topo_order()) {
        ell[v] = 1;
        p.below[v].for_each([&](int w) {
            if (sgn(phi.label[w]) != sgn(phi.label[v]) && ell[w] + 1 > ell[v]) {
                ell[v] = ell[w] + 1;
                parent[v] = w;
            }
        });
        if (best < 0 || ell[v] > ell[best]) best = v;
    }
    std::vector<int> chain;
    for (int v = best; v >= 0; v = parent[v]) chain.push_back(v);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::vector<int> prescribed_alternating_chain(const FreeZ2Poset& p,
                                              const LadderMap& phi,
                                              const std::vector<int>& eps) {
    if (static_cast<int>(eps.size()) != phi.s + 1)
        throw InvalidInput("prescribed_alternating_chain: need one sign per "
                           "level");
    for (int e : eps)
        if (e != 1 && e != -1)
            throw InvalidInput("prescribed_alternating_chain: signs must be "
                               "+-1");
    // Twist the map so that the wanted chain becomes alternating and starts
    // negative: flip each label according to its magnitude.
    LadderMap twisted{phi.s, std::vector<int>(p.size)};
    for (int v = 0; v < p.size; ++v) {
        int i = std::abs(phi.label[v]);
        if (i < 1 || i > phi.s + 1)
            throw InvalidInput("prescribed_alternating_chain: label outside "
                               "the ladder");
        int flip = (i % 2 == 0 ? 1 : -1) * eps[i - 1];
        twisted.label[v] = flip * phi.label[v];
    }
    auto chain = longest_alternating_chain(p, twisted);
    if (static_cast<int>(chain.size()) != phi.s + 1)
        throw ClaimFailure("prescribed_alternating_chain: no full-length "
                           "alternating chain; the map's level count exceeds "
                           "the cross-index");
    if (twisted.label[chain[0]] > 0)
        for (int& v : chain) v = p.nu[v];
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (phi.label[chain[i]] != eps[i] * static_cast<int>(i + 1))
            throw ClaimFailure("prescribed_alternating_chain: extracted chain "
                               "misses its prescribed labels");
    return chain;
}

std::vector<std::uint64_t> alternating_simplex_chain(
    const Z2Complex& k, const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) != k.vertices)
        throw InvalidInput("alternating_simplex_chain: one label per vertex");
    int top = 0;
    for (int v = 0; v < k.vertices; ++v) {
        if (labels[v] == 0)
            throw InvalidInput("alternating_simplex_chain: labels must be "
                               "nonzero");
        if (labels[k.nu[v]] != -labels[v])
            throw InvalidInput("alternating_simplex_chain: labeling is not "
                               "antipodal");
        top = std::max(top, std::abs(labels[v]));
    }
    auto fp = face_poset(k);
    int n = fp.poset.size;
    LadderMap phi{top - 1, std::vector<int>(n)};
    for (int i = 0; i < n; ++i) {
        int best = 0;
        std::vector<int> present;
        std::uint64_t m = fp.face_masks[i];
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (std::find(present.begin(), present.end(), -labels[v]) !=
                present.end())
                throw InvalidInput("alternating_simplex_chain: a face "
                                   "carries complementary labels");
            present.push_back(labels[v]);
            if (std::abs(labels[v]) > std::abs(best)) best = labels[v];
        }
        phi.label[i] = best;
    }
    auto chain = longest_alternating_chain(fp.poset, phi);
    std::vector<std::uint64_t> faces;
    for (int i : chain) faces.push_back(fp.face_masks[i]);
    return faces;
}

} // namespace kneser
