#include <kneser/witness_search.hpp>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include <kneser/chromatic.hpp>
#include <kneser/errors.hpp>

namespace kneser {

namespace {

bool sorted_distinct(const std::vector<int>& v, int m) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= m) return false;
        if (i > 0 && v[i] <= v[i - 1]) return false;
    }
    return true;
}

bool complete_between(const Graph& g, const std::vector<int>& a,
                      const std::vector<int>& b) {
    for (int u : a)
        for (int v : b)
            if (!g.adjacent(u, v)) return false;
    return true;
}

int distinct_colors(const Coloring& c, const BipartiteState& s) {
    std::vector<int> cols;
    for (const auto* side : {&s.a, &s.b})
        for (int v : *side) cols.push_back(c.color[v]);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    return int(cols.size());
}

// Vertices ordered by (color, index); search procedures scan candidates in
// this order so the first witness found is deterministic.
std::vector<int> color_order(const Graph& g, const Coloring& c) {
    std::vector<int> order(g.m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int u, int v) { return c.color[u] < c.color[v]; });
    return order;
}

} // namespace

bool bipartite_state_valid(const Graph& g, const BipartiteState& s) {
    if (s.a.empty() || s.b.empty()) return false;
    if (!sorted_distinct(s.a, g.m) || !sorted_distinct(s.b, g.m)) return false;
    std::vector<int> both;
    std::set_intersection(s.a.begin(), s.a.end(), s.b.begin(), s.b.end(),
                          std::back_inserter(both));
    if (!both.empty()) return false;
    return complete_between(g, s.a, s.b);
}

std::optional<BipartiteState> find_zigzag(const Graph& g, const Coloring& c,
                                          int t) {
    if (t < 1) throw InvalidInput("zigzag: t must be >= 1");
    std::vector<int> order = color_order(g, c);
    std::vector<int> picks;
    // picks alternate sides: even positions on a, odd on b, with strictly
    // increasing colors along the sequence.
    std::function<bool(int)> go = [&](int from) {
        if (int(picks.size()) == t) return true;
        bool to_a = picks.size() % 2 == 0;
        for (int idx = from; idx < g.m; ++idx) {
            int v = order[idx];
            if (!picks.empty() && c.color[v] <= c.color[picks.back()]) continue;
            bool ok = true;
            for (std::size_t j = to_a ? 1 : 0; ok && j < picks.size(); j += 2)
                ok = g.adjacent(v, picks[j]);
            if (!ok) continue;
            picks.push_back(v);
            if (go(idx + 1)) return true;
            picks.pop_back();
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    BipartiteState s;
    for (std::size_t i = 0; i < picks.size(); ++i)
        (i % 2 == 0 ? s.a : s.b).push_back(picks[i]);
    std::sort(s.a.begin(), s.a.end());
    std::sort(s.b.begin(), s.b.end());
    return s;
}

bool zigzag_valid(const Graph& g, const Coloring& c, int t,
                  const BipartiteState& s) {
    if (t < 1) return false;
    if (int(s.a.size()) != (t + 1) / 2 || int(s.b.size()) != t / 2)
        return false;
    if (!sorted_distinct(s.a, g.m) || !sorted_distinct(s.b, g.m)) return false;
    if (!complete_between(g, s.a, s.b)) return false;
    // Sorted increasingly, the t distinct colors must alternate sides
    // starting on a.
    std::vector<std::pair<int, bool>> ranked; // (color, on side a)
    for (int v : s.a) ranked.push_back({c.color[v], true});
    for (int v : s.b) ranked.push_back({c.color[v], false});
    std::sort(ranked.begin(), ranked.end());
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        if (i > 0 && ranked[i].first == ranked[i - 1].first) return false;
        if (ranked[i].second != (i % 2 == 0)) return false;
    }
    return true;
}

std::optional<BipartiteState> find_colorful_klm(const Graph& g,
                                                const Coloring& c,
                                                std::vector<int> I,
                                                std::vector<int> J) {
    if (I.empty() || J.empty())
        throw InvalidInput("both color sides must be nonempty");
    std::sort(I.begin(), I.end());
    std::sort(J.begin(), J.end());
    for (const auto* side : {&I, &J}) {
        if (std::adjacent_find(side->begin(), side->end()) != side->end())
            throw InvalidInput("a color appears twice on one side");
        for (int col : *side)
            if (col < 1 || col > c.t)
                throw InvalidInput("a requested color lies outside the palette");
    }
    std::vector<int> shared;
    std::set_intersection(I.begin(), I.end(), J.begin(), J.end(),
                          std::back_inserter(shared));
    if (!shared.empty())
        throw InvalidInput("the two color sides must be disjoint");

    // One slot per requested color, ascending, tagged with its side; a pick
    // must be adjacent to every earlier pick of the other side.
    std::vector<std::pair<int, bool>> slots; // (color, on side a)
    for (int col : I) slots.push_back({col, true});
    for (int col : J) slots.push_back({col, false});
    std::sort(slots.begin(), slots.end());
    std::vector<int> picks(slots.size(), -1);
    std::function<bool(std::size_t)> go = [&](std::size_t k) {
        if (k == slots.size()) return true;
        for (int v = 0; v < g.m; ++v) {
            if (c.color[v] != slots[k].first) continue;
            bool ok = true;
            for (std::size_t j = 0; ok && j < k; ++j)
                if (slots[j].second != slots[k].second)
                    ok = g.adjacent(v, picks[j]);
            if (!ok) continue;
            picks[k] = v;
            if (go(k + 1)) return true;
        }
        picks[k] = -1;
        return false;
    };
    if (!go(0)) return std::nullopt;
    BipartiteState s;
    for (std::size_t k = 0; k < slots.size(); ++k)
        (slots[k].second ? s.a : s.b).push_back(picks[k]);
    std::sort(s.a.begin(), s.a.end());
    std::sort(s.b.begin(), s.b.end());
    return s;
}

bool colorful_klm_valid(const Graph& g, const Coloring& c,
                        const std::vector<int>& I, const std::vector<int>& J,
                        const BipartiteState& s) {
    if (!bipartite_state_valid(g, s)) return false;
    auto colors_of = [&](const std::vector<int>& side) {
        std::vector<int> cols;
        for (int v : side) cols.push_back(c.color[v]);
        std::sort(cols.begin(), cols.end());
        return cols;
    };
    auto want = [](std::vector<int> side) {
        std::sort(side.begin(), side.end());
        return side;
    };
    std::vector<int> ca = colors_of(s.a), cb = colors_of(s.b);
    if (std::adjacent_find(ca.begin(), ca.end()) != ca.end()) return false;
    if (std::adjacent_find(cb.begin(), cb.end()) != cb.end()) return false;
    return ca == want(I) && cb == want(J);
}

std::optional<KttStarWitness> find_ktt_star(const Graph& g, const Coloring& c,
                                            int t) {
    if (t < 1) throw InvalidInput("t must be >= 1");
    if (c.t != t) throw InvalidInput("the coloring must use exactly t colors");
    std::vector<std::vector<int>> classes(t + 1);
    for (int v = 0; v < g.m; ++v) {
        if (c.color[v] < 1 || c.color[v] > t)
            throw InvalidInput("a color lies outside [1, t]");
        classes[c.color[v]].push_back(v);
    }
    std::vector<int> as(t, -1), bs(t, -1);
    // Pairs are chosen color by color; the cross-adjacency constraint is
    // checked against all earlier pairs. Requiring a < b for color 1 removes
    // the global side swap.
    std::function<bool(int)> go = [&](int k) {
        if (k == t) return true;
        for (int av : classes[k + 1]) {
            bool aok = true;
            for (int j = 0; aok && j < k; ++j) aok = g.adjacent(av, bs[j]);
            if (!aok) continue;
            for (int bv : classes[k + 1]) {
                if (bv == av || (k == 0 && bv < av)) continue;
                bool bok = true;
                for (int j = 0; bok && j < k; ++j) bok = g.adjacent(bv, as[j]);
                if (!bok) continue;
                as[k] = av;
                bs[k] = bv;
                if (go(k + 1)) return true;
            }
        }
        as[k] = bs[k] = -1;
        return false;
    };
    if (!go(0)) return std::nullopt;
    KttStarWitness w;
    w.t = t;
    w.a_side = as;
    w.b_side = bs;
    return w;
}

namespace {

struct PathSearch {
    const Graph& g;
    const Coloring& c;
    const int t;
    const long cap;
    std::vector<std::uint64_t> adj;
    using State = std::pair<std::uint64_t, std::uint64_t>;

    PathSearch(const Graph& g_, const Coloring& c_, int t_, long cap_)
        : g(g_), c(c_), t(t_), cap(cap_) {
        adj.assign(g.m, 0);
        for (int u = 0; u < g.m; ++u)
            g.adj[u].for_each(
                [&](int v) { adj[u] |= std::uint64_t(1) << v; });
    }

    int color_count(std::uint64_t verts) const {
        std::uint64_t cols = 0;
        while (verts) {
            int v = std::countr_zero(verts);
            verts &= verts - 1;
            cols |= std::uint64_t(1) << (c.color[v] - 1);
        }
        return std::popcount(cols);
    }

    bool valid_state(std::uint64_t a, std::uint64_t b) const {
        if (!a || !b || (a & b)) return false;
        int ca = std::popcount(a), cb = std::popcount(b);
        if (ca + cb != t || std::abs(ca - cb) > 2) return false;
        for (std::uint64_t rest = a; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (b & ~adj[v]) return false;
        }
        return color_count(a | b) >= t - 1;
    }

    // Heterochromatic states with side sizes differing by at most one, in
    // (color, index) pick order. The first picked vertex goes on side a,
    // which drops each state's side-swapped twin.
    std::vector<State> starts() const {
        std::vector<State> out;
        std::vector<int> order = color_order(g, c);
        std::function<void(int, std::uint64_t, std::uint64_t, int)> go =
            [&](int from, std::uint64_t a, std::uint64_t b, int last_color) {
                int na = std::popcount(a), nb = std::popcount(b);
                if (na + nb == t) {
                    if (std::abs(na - nb) <= 1) out.push_back({a, b});
                    return;
                }
                for (int idx = from; idx < g.m; ++idx) {
                    int v = order[idx];
                    if (c.color[v] <= last_color) continue;
                    std::uint64_t bit = std::uint64_t(1) << v;
                    if (na < (t + 1) / 2 && (b & ~adj[v]) == 0)
                        go(idx + 1, a | bit, b, c.color[v]);
                    if (a != 0 && nb < (t + 1) / 2 && (a & ~adj[v]) == 0)
                        go(idx + 1, a, b | bit, c.color[v]);
                }
            };
        go(0, 0, 0, 0);
        return out;
    }

    void successors(const State& s, const std::function<void(State)>& f) const {
        std::uint64_t all = s.first | s.second;
        for (std::uint64_t rest = all; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t ubit = std::uint64_t(1) << u;
            std::uint64_t ra = s.first & ~ubit, rb = s.second & ~ubit;
            bool u_in_a = (s.first & ubit) != 0;
            for (int side = 0; side < 2; ++side) {
                for (int w = 0; w < g.m; ++w) {
                    std::uint64_t wbit = std::uint64_t(1) << w;
                    if ((ra | rb) & wbit) continue;
                    if (w == u && (side == 0) == u_in_a) continue;
                    std::uint64_t na = ra | (side == 0 ? wbit : 0);
                    std::uint64_t nb = rb | (side == 0 ? 0 : wbit);
                    if (valid_state(na, nb)) f({na, nb});
                }
            }
        }
    }

    std::optional<PathWitness> run() const {
        for (const State& s : starts()) {
            State target{s.second, s.first};
            std::map<State, State> parent;
            std::deque<State> queue{s};
            parent.emplace(s, s);
            bool found = false;
            while (!queue.empty() && !found) {
                State cur = queue.front();
                queue.pop_front();
                successors(cur, [&](State nxt) {
                    if (found || parent.count(nxt)) return;
                    if (long(parent.size()) >= cap)
                        throw CapExceeded(
                            "the path search hit its state cap of " +
                            std::to_string(cap));
                    parent.emplace(nxt, cur);
                    if (nxt == target)
                        found = true;
                    else
                        queue.push_back(nxt);
                });
            }
            if (!found) continue;
            std::vector<State> path{target};
            while (path.back() != s) path.push_back(parent.at(path.back()));
            std::reverse(path.begin(), path.end());
            PathWitness w;
            w.t = t;
            for (const State& st : path) {
                BipartiteState bs;
                for (int v = 0; v < g.m; ++v) {
                    std::uint64_t bit = std::uint64_t(1) << v;
                    if (st.first & bit) bs.a.push_back(v);
                    if (st.second & bit) bs.b.push_back(v);
                }
                w.states.push_back(std::move(bs));
            }
            return w;
        }
        return std::nullopt;
    }
};

} // namespace

std::optional<PathWitness> find_path_of_subgraphs(const Graph& g,
                                                  const Coloring& c, int t,
                                                  long state_cap) {
    if (t < 2) throw InvalidInput("the path search needs t >= 2");
    if (g.m > 64)
        throw InvalidInput("the path search supports at most 64 vertices");
    if (c.t > 64)
        throw InvalidInput("the path search supports at most 64 colors");
    for (int v : c.color)
        if (v < 1 || v > c.t)
            throw InvalidInput("a color lies outside the palette");
    if (state_cap < 1) throw InvalidInput("state cap must be positive");
    return PathSearch(g, c, t, state_cap).run();
}

bool path_witness_valid(const Graph& g, const Coloring& c,
                        const PathWitness& w) {
    const int t = w.t;
    if (t < 2 || w.states.size() < 2) return false;
    for (const BipartiteState& s : w.states) {
        if (!bipartite_state_valid(g, s)) return false;
        int na = int(s.a.size()), nb = int(s.b.size());
        if (na + nb != t || std::abs(na - nb) > 2) return false;
        if (distinct_colors(c, s) < t - 1) return false;
    }
    const BipartiteState& first = w.states.front();
    const BipartiteState& last = w.states.back();
    if (distinct_colors(c, first) != t) return false;
    if (std::abs(int(first.a.size()) - int(first.b.size())) > 1) return false;
    if (last.a != first.b || last.b != first.a) return false;
    auto left_over = [](const std::vector<int>& x, const std::vector<int>& y) {
        std::vector<int> d;
        std::set_difference(x.begin(), x.end(), y.begin(), y.end(),
                            std::back_inserter(d));
        return int(d.size());
    };
    for (std::size_t i = 0; i + 1 < w.states.size(); ++i) {
        const BipartiteState& s = w.states[i];
        const BipartiteState& n = w.states[i + 1];
        if (left_over(s.a, n.a) + left_over(s.b, n.b) != 1) return false;
        if (left_over(n.a, s.a) + left_over(n.b, s.b) != 1) return false;
    }
    return true;
}

VerifyReport verify_for_all_colorings(
    const Graph& g, int t, const std::function<bool(const Coloring&)>& check) {
    VerifyReport r;
    for_each_canonical_coloring(g, t, [&](const Coloring& col) {
        if (!check(col)) {
            ++r.failures;
            if (r.failing.size() < 16) r.failing.push_back(r.total);
        }
        ++r.total;
        return true;
    });
    return r;
}

VerifyReport verify_sampled_colorings(
    const Graph& g, int t, long samples, std::uint64_t seed,
    const std::function<bool(const Coloring&)>& check) {
    if (samples < 1) throw InvalidInput("sample count must be positive");
    VerifyReport r;
    r.sampled = true;
    r.seed = seed;
    Rng rng = make_rng(seed);
    for (long i = 0; i < samples; ++i) {
        Coloring col = sample_coloring(g, t, rng);
        if (!check(col)) {
            ++r.failures;
            if (r.failing.size() < 16) r.failing.push_back(r.total);
        }
        ++r.total;
    }
    return r;
}

} // namespace kneser
