#include "kneser/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "kneser/errors.hpp"

namespace kneser {

namespace {

// Greedy clique on a degree-descending vertex order.
std::vector<int> greedy_clique(const Graph& g) {
    std::vector<int> order(g.m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) { ok = false; break; }
        if (ok) clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

// DSATUR heuristic coloring; returns the number of colors used and fills out.
int dsatur(const Graph& g, std::vector<int>& out) {
    int m = g.m;
    out.assign(m, -1);
    std::vector<Bits> neighbor_colors(m, Bits(m + 1));
    int used = 0;
    for (int step = 0; step < m; ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < m; ++v) {
            if (out[v] >= 0) continue;
            int sat = neighbor_colors[v].count();
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        int c = 0;
        while (neighbor_colors[best].test(c)) ++c;
        out[best] = c;
        used = std::max(used, c + 1);
        g.adj[best].for_each([&](int u) { neighbor_colors[u].set(c); });
    }
    return used;
}

// Backtracking k-colorability with DSATUR branching. `fixed` pre-colors a
// clique; colors above max_used+1 are never tried on uncolored vertices.
class KColorSearch {
  public:
    KColorSearch(const Graph& g, int k) : g_(g), k_(k), color_(g.m, -1),
                                          neighbor_colors_(g.m, Bits(k)) {}

    void fix(int v, int c) {
        color_[v] = c;
        max_used_ = std::max(max_used_, c);
        g_.adj[v].for_each([&](int u) { neighbor_colors_[u].set(c); });
        ++colored_;
    }

    bool run(std::vector<int>& out) {
        if (dfs()) { out = color_; return true; }
        return false;
    }

  private:
    bool dfs() {
        if (colored_ == g_.m) return true;
        int v = pick();
        int limit = std::min(k_ - 1, max_used_ + 1);
        for (int c = 0; c <= limit; ++c) {
            if (neighbor_colors_[v].test(c)) continue;
            place(v, c);
            if (dfs()) return true;
            unplace(v, c);
        }
        return false;
    }

    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g_.m; ++v) {
            if (color_[v] >= 0) continue;
            int sat = neighbor_colors_[v].count();
            int deg = g_.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    void place(int v, int c) {
        color_[v] = c;
        ++colored_;
        saved_max_.push_back(max_used_);
        max_used_ = std::max(max_used_, c);
        touched_.emplace_back();
        auto& t = touched_.back();
        g_.adj[v].for_each([&](int u) {
            if (!neighbor_colors_[u].test(c)) {
                neighbor_colors_[u].set(c);
                t.push_back(u);
            }
        });
    }

    void unplace(int v, int c) {
        for (int u : touched_.back()) neighbor_colors_[u].reset(c);
        touched_.pop_back();
        max_used_ = saved_max_.back();
        saved_max_.pop_back();
        --colored_;
        color_[v] = -1;
    }

    const Graph& g_;
    int k_;
    std::vector<int> color_;
    std::vector<Bits> neighbor_colors_;
    std::vector<std::vector<int>> touched_;
    std::vector<int> saved_max_;
    int colored_ = 0;
    int max_used_ = -1;
};

bool try_k_coloring(const Graph& g, int k, const std::vector<int>& clique,
                    std::vector<int>& out) {
    if (static_cast<int>(clique.size()) > k) return false;
    KColorSearch search(g, k);
    for (std::size_t i = 0; i < clique.size(); ++i)
        search.fix(clique[i], static_cast<int>(i));
    return search.run(out);
}

// Renumber colors by first use along the vertex order, into 1..t.
Coloring canonicalize(const std::vector<int>& raw, int t) {
    std::vector<int> remap(t, 0);
    Coloring col;
    col.t = t;
    col.color.resize(raw.size());
    int next = 1;
    for (std::size_t v = 0; v < raw.size(); ++v) {
        if (remap[raw[v]] == 0) remap[raw[v]] = next++;
        col.color[v] = remap[raw[v]];
    }
    return col;
}

} // namespace

ChromaticResult chromatic_number(const Graph& g) {
    ChromaticResult res;
    if (g.m == 0) throw InvalidInput("chromatic_number: empty graph");
    if (g.edge_count() == 0) {
        res.chi = 1;
        res.witness.t = 1;
        res.witness.color.assign(g.m, 1);
        return res;
    }
    auto clique = greedy_clique(g);
    std::vector<int> heur;
    int ub = dsatur(g, heur);
    int lb = static_cast<int>(clique.size());
    std::vector<int> best = heur;
    int best_k = ub;
    for (int k = lb; k < best_k; ++k) {
        std::vector<int> out;
        if (try_k_coloring(g, k, clique, out)) {
            best = out;
            best_k = k;
            break;
        }
    }
    res.chi = best_k;
    res.witness = canonicalize(best, best_k);
    return res;
}

bool k_colorable(const Graph& g, int k) {
    if (k <= 0) return false;
    if (g.edge_count() == 0) return true;
    auto clique = greedy_clique(g);
    std::vector<int> out;
    return try_k_coloring(g, k, clique, out);
}

void for_each_canonical_coloring(const Graph& g, int t,
                                 const std::function<bool(const Coloring&)>& f) {
    if (t < 1 || t > g.m) return;
    std::vector<int> color(g.m, -1);
    // Depth-first over vertices in index order; color c is allowed at vertex v
    // only if c <= (max color used on 0..v-1) + 1, which enumerates each
    // coloring class exactly once, in canonical form.
    std::function<bool(int, int)> dfs = [&](int v, int used) -> bool {
        if (t - used > g.m - v) return true; // cannot reach t colors anymore
        if (v == g.m) {
            if (used != t) return true;
            Coloring col;
            col.t = t;
            col.color.resize(g.m);
            for (int u = 0; u < g.m; ++u) col.color[u] = color[u] + 1;
            return f(col);
        }
        int limit = std::min(t - 1, used);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            g.adj[v].for_each([&](int u) {
                if (u < v && color[u] == c) ok = false;
            });
            if (!ok) continue;
            color[v] = c;
            if (!dfs(v + 1, std::max(used, c + 1))) { color[v] = -1; return false; }
            color[v] = -1;
        }
        return true;
    };
    dfs(0, 0);
}

std::vector<Coloring> all_canonical_colorings(const Graph& g, int t) {
    std::vector<Coloring> out;
    for_each_canonical_coloring(g, t, [&](const Coloring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

Coloring sample_coloring(const Graph& g, int t, Rng& rng) {
    if (t < 1 || t > g.m)
        throw InvalidInput("sample_coloring: color count out of range");
    if (t > 32)
        throw InvalidInput("sample_coloring: at most 32 colors supported");
    // Most-constrained-vertex backtracking with forward checking, random
    // tie-breaks and color order. Each attempt runs under a node budget and
    // must end up using all t colors; otherwise it restarts with fresh
    // randomness.
    const int kAttempts = 200;
    const long kNodeBudget = 500000;
    const std::uint32_t full = t == 32 ? ~std::uint32_t(0)
                                       : (std::uint32_t(1) << t) - 1;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<std::uint32_t> allowed(g.m, full);
        std::vector<int> color(g.m, -1);
        long nodes = 0;
        bool aborted = false;
        std::function<bool(int, std::uint32_t)> dfs =
            [&](int colored, std::uint32_t used) -> bool {
            if (aborted) return false;
            if (++nodes > kNodeBudget) {
                aborted = true;
                return false;
            }
            if (std::popcount(used) + (g.m - colored) < t) return false;
            if (colored == g.m) return used == full;
            int v = -1, fewest = t + 1, ties = 0;
            for (int u = 0; u < g.m; ++u) {
                if (color[u] >= 0) continue;
                int k = std::popcount(allowed[u]);
                if (k < fewest) {
                    fewest = k;
                    v = u;
                    ties = 1;
                } else if (k == fewest) {
                    ++ties;
                    if (std::uniform_int_distribution<int>(0, ties - 1)(rng) == 0)
                        v = u;
                }
            }
            if (fewest == 0) return false;
            int cand[32];
            int nc = 0;
            for (std::uint32_t m = allowed[v]; m;) {
                int c = std::countr_zero(m);
                m &= m - 1;
                cand[nc++] = c;
            }
            std::shuffle(cand, cand + nc, rng);
            for (int i = 0; i < nc; ++i) {
                int c = cand[i];
                std::uint32_t bit = std::uint32_t(1) << c;
                std::vector<int> cleared;
                bool wiped = false;
                g.adj[v].for_each([&](int u) {
                    if (color[u] >= 0 || !(allowed[u] & bit)) return;
                    allowed[u] &= ~bit;
                    cleared.push_back(u);
                    if (allowed[u] == 0) wiped = true;
                });
                if (!wiped) {
                    color[v] = c;
                    if (dfs(colored + 1, used | bit)) return true;
                    color[v] = -1;
                }
                for (int u : cleared) allowed[u] |= bit;
                if (aborted) return false;
            }
            return false;
        };
        if (!dfs(0, 0)) continue;
        Coloring col;
        col.t = t;
        col.color.resize(g.m);
        for (int v = 0; v < g.m; ++v) col.color[v] = color[v] + 1;
        return col;
    }
    throw InvalidInput("sample_coloring: no surjective coloring found");
}

} // namespace kneser
