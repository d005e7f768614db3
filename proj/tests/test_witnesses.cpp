#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "kneser/certificates.hpp"
#include "kneser/chromatic.hpp"
#include "kneser/circular.hpp"
#include "kneser/colorful.hpp"
#include "kneser/errors.hpp"
#include "kneser/families.hpp"
#include "kneser/graph.hpp"
#include "kneser/hom.hpp"
#include "kneser/product_labeling.hpp"
#include "kneser/tristar.hpp"
#include "kneser/two_coloring.hpp"
#include "kneser/witness_search.hpp"
#include "kneser/witnesses.hpp"
#include "kneser/xind.hpp"

using namespace kneser;
using nlohmann::json;

namespace {

Graph cycle(int m) {
    Graph g(m);
    for (int v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
    return g;
}

Graph complete(int m) {
    Graph g(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

Graph petersen() { return kneser_graph(complete_uniform(5, 2)); }

int side_gap(const BipartiteState& s) {
    return std::abs(int(s.a.size()) - int(s.b.size()));
}

int distinct_colors(const Coloring& c, const BipartiteState& s) {
    std::set<int> seen;
    for (int v : s.a) seen.insert(c.color[v]);
    for (int v : s.b) seen.insert(c.color[v]);
    return int(seen.size());
}

bool complete_bipartite(const Graph& g, const BipartiteState& s) {
    for (int u : s.a)
        for (int v : s.b)
            if (!g.adjacent(u, v)) return false;
    return true;
}

bool distinct_vertices(const BipartiteState& s) {
    std::vector<int> all(s.a);
    all.insert(all.end(), s.b.begin(), s.b.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

// The path contract, restated from scratch so the library checker has an
// independent counterpart.
bool path_ok(const Graph& g, const Coloring& c, const PathWitness& w) {
    if (w.states.empty()) return false;
    int t = w.t;
    for (const BipartiteState& s : w.states) {
        if (s.a.empty() || s.b.empty()) return false;
        if (!distinct_vertices(s)) return false;
        if (int(s.a.size() + s.b.size()) != t) return false;
        if (distinct_colors(c, s) < t - 1) return false;
        if (side_gap(s) > 2) return false;
        if (!complete_bipartite(g, s)) return false;
    }
    const BipartiteState& first = w.states.front();
    if (distinct_colors(c, first) != t || side_gap(first) > 1) return false;
    const BipartiteState& last = w.states.back();
    if (last.a != first.b || last.b != first.a) return false;
    for (std::size_t i = 1; i < w.states.size(); ++i) {
        std::set<int> prev(w.states[i - 1].a.begin(), w.states[i - 1].a.end());
        prev.insert(w.states[i - 1].b.begin(), w.states[i - 1].b.end());
        std::set<int> next(w.states[i].a.begin(), w.states[i].a.end());
        next.insert(w.states[i].b.begin(), w.states[i].b.end());
        std::vector<int> removed, added;
        std::set_difference(prev.begin(), prev.end(), next.begin(), next.end(),
                            std::back_inserter(removed));
        std::set_difference(next.begin(), next.end(), prev.begin(), prev.end(),
                            std::back_inserter(added));
        if (removed.size() != added.size() || removed.size() > 1) return false;
        if (removed.empty() && w.states[i - 1].a == w.states[i].a) return false;
    }
    return true;
}

json jparse(const std::string& s) { return json::parse(s); }

std::string cert(const std::string& kind, const json& params,
                 const json& value, const json& witness) {
    return make_certificate(kind, params.dump(), value.dump(), witness.dump(),
                            3);
}

} // namespace

TEST_CASE("[zigzag] every optimal Petersen coloring has an alternating ladder") {
    Graph g = petersen();
    long seen = 0;
    for_each_canonical_coloring(g, 3, [&](const Coloring& c) {
        auto w = find_zigzag(g, c, 3);
        REQUIRE(w.has_value());
        CHECK(zigzag_valid(g, c, 3, *w));
        CHECK(distinct_vertices(*w));
        CHECK(complete_bipartite(g, *w));
        CHECK(int(w->a.size() + w->b.size()) == 3);

        std::vector<std::pair<int, char>> ranked;
        for (int v : w->a) ranked.push_back({c.color[v], 'a'});
        for (int v : w->b) ranked.push_back({c.color[v], 'b'});
        std::sort(ranked.begin(), ranked.end());
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            if (i > 0) CHECK(ranked[i].first != ranked[i - 1].first);
            CHECK(ranked[i].second == (i % 2 == 0 ? 'a' : 'b'));
        }
        ++seen;
        return true;
    });
    CHECK(seen == 20);
}

TEST_CASE("[zigzag] dropping the largest color leaves a valid witness") {
    Graph g = petersen();
    for_each_canonical_coloring(g, 3, [&](const Coloring& c) {
        auto w = find_zigzag(g, c, 3);
        REQUIRE(w.has_value());
        std::vector<int> colors;
        for (int v : w->a) colors.push_back(c.color[v]);
        for (int v : w->b) colors.push_back(c.color[v]);
        std::sort(colors.begin(), colors.end());
        int largest = colors.back();
        BipartiteState cut;
        for (int v : w->a)
            if (c.color[v] != largest) cut.a.push_back(v);
        for (int v : w->b)
            if (c.color[v] != largest) cut.b.push_back(v);
        CHECK(zigzag_valid(g, c, 2, cut));
        return true;
    });
}

TEST_CASE("[klm] brute search covers every bipartition on C5 colorings") {
    Graph g = cycle(5);
    long seen = 0;
    for_each_canonical_coloring(g, 3, [&](const Coloring& c) {
        for (int mask = 1; mask + 1 < (1 << 3); ++mask) {
            std::vector<int> I, J;
            for (int color = 1; color <= 3; ++color)
                (mask >> (color - 1) & 1 ? I : J).push_back(color);
            auto w = find_colorful_klm(g, c, I, J);
            REQUIRE(w.has_value());
            CHECK(colorful_klm_valid(g, c, I, J, *w));
            CHECK(distinct_vertices(*w));
            CHECK(complete_bipartite(g, *w));
            std::vector<int> got_i, got_j;
            for (int v : w->a) got_i.push_back(c.color[v]);
            for (int v : w->b) got_j.push_back(c.color[v]);
            std::sort(got_i.begin(), got_i.end());
            std::sort(got_j.begin(), got_j.end());
            CHECK(got_i == I);
            CHECK(got_j == J);
        }
        ++seen;
        return true;
    });
    CHECK(seen == 5);
}

TEST_CASE("[klm] ladder extraction agrees with brute search on the Petersen graph") {
    Graph g = petersen();
    Coloring c = kneser_min_coloring(5, 2);
    HomK2 hom = hom_k2(g);
    for (int mask = 1; mask + 1 < (1 << 3); ++mask) {
        std::vector<int> I, J;
        for (int color = 1; color <= 3; ++color)
            (mask >> (color - 1) & 1 ? I : J).push_back(color);
        ColorfulKlm w = colorful_klm_extract(g, c, I, J, hom);
        CHECK(colorful_klm_valid(g, c, I, J, w));
        CHECK(!w.chain.empty());
        CHECK(find_colorful_klm(g, c, I, J).has_value());
    }
}

TEST_CASE("[klm] an empty side degenerates to one vertex per color") {
    Graph g = petersen();
    Coloring c = kneser_min_coloring(5, 2);
    HomK2 hom = hom_k2(g);
    ColorfulKlm w = colorful_klm_extract(g, c, {1, 2, 3}, {}, hom);
    CHECK(colorful_klm_valid(g, c, {1, 2, 3}, {}, w));
    CHECK(w.side_a.size() == 3);
    CHECK(w.side_b.empty());
    CHECK(w.chain.empty());
}

TEST_CASE("[ktt] extraction and brute search agree on single factors") {
    for (auto [n, k] : {std::pair{5, 2}, {6, 2}, {7, 3}}) {
        auto ctx = ProductLabelingContext::build({complete_uniform(n, k)});
        KttStarWitness extracted = extract_ktt_star(ctx);
        CHECK(ktt_star_valid(ctx.product, ctx.coloring, extracted));
        auto brute = find_ktt_star(ctx.product, ctx.coloring, ctx.t);
        REQUIRE(brute.has_value());
        CHECK(ktt_star_valid(ctx.product, ctx.coloring, *brute));
    }
}

TEST_CASE("[ktt] products get the parity padding and still extract") {
    auto ctx = ProductLabelingContext::build(
        {complete_uniform(5, 2), complete_uniform(5, 2)});
    CHECK(ctx.t == 3);
    CHECK(ctx.n == 11);
    CHECK(ctx.product.m == 100);
    CHECK(ctx.factors[0].m == 10);
    KttStarWitness w = extract_ktt_star(ctx);
    CHECK(ktt_star_valid(ctx.product, ctx.coloring, w));
}

TEST_CASE("[ktt] low-palette routes bypass the chain pipeline") {
    auto edgeless = ProductLabelingContext::build({complete_uniform(3, 2)});
    CHECK(edgeless.t == 1);
    KttStarWitness w1 = extract_ktt_star(edgeless);
    CHECK(w1.t == 1);
    CHECK(ktt_star_valid(edgeless.product, edgeless.coloring, w1));

    auto two = ProductLabelingContext::build(
        {complete_uniform(4, 2), complete_uniform(5, 2)});
    CHECK(two.t == 2);
    KttStarWitness w2 = extract_ktt_star(two);
    CHECK(ktt_star_valid(two.product, two.coloring, w2));
}

TEST_CASE("[ktt] the two-colored edge admits no crossed pair") {
    Graph k2 = complete(2);
    Coloring c{2, {1, 2}};
    CHECK(!find_ktt_star(k2, c, 2).has_value());
}

TEST_CASE("[ktt] pullback labels take their frozen values") {
    auto ctx = ProductLabelingContext::build({complete_uniform(5, 2)},
                                             kneser_min_coloring(5, 2));
    CHECK(lambda_value(ctx, SignVector::parse("+-000")) == 2);
    CHECK(lambda_value(ctx, SignVector::parse("++--0")) == -5);
}

TEST_CASE("[path] every optimal Petersen coloring walks to its mirror") {
    Graph g = petersen();
    long seen = 0;
    for_each_canonical_coloring(g, 3, [&](const Coloring& c) {
        auto w = find_path_of_subgraphs(g, c, 3);
        REQUIRE(w.has_value());
        CHECK(path_witness_valid(g, c, *w));
        CHECK(path_ok(g, c, *w));
        ++seen;
        return true;
    });
    CHECK(seen == 20);
}

TEST_CASE("[path] the independent checker rejects broken walks") {
    Graph g = petersen();
    Coloring c = kneser_min_coloring(5, 2);
    auto w = find_path_of_subgraphs(g, c, 3);
    REQUIRE(w.has_value());
    REQUIRE(path_ok(g, c, *w));

    PathWitness bad = *w;
    bad.states.pop_back();
    CHECK(!path_witness_valid(g, c, bad));
    CHECK(!path_ok(g, c, bad));

    bad = *w;
    std::swap(bad.states.front().a, bad.states.front().b);
    CHECK(path_witness_valid(g, c, bad) == path_ok(g, c, bad));
}

TEST_CASE("[path] tiny caps abort instead of degrading") {
    Graph g = petersen();
    Coloring c = kneser_min_coloring(5, 2);
    CHECK_THROWS_AS(find_path_of_subgraphs(g, c, 3, 2), CapExceeded);
}

TEST_CASE("[verify] exhaustive campaigns count canonical colorings") {
    Graph g = cycle(5);
    long calls = 0;
    VerifyReport r = verify_for_all_colorings(g, 3, [&](const Coloring& c) {
        ++calls;
        return c.color[0] == 1;
    });
    CHECK(r.total == 5);
    CHECK(calls == 5);
    CHECK(r.failures == 0);
    CHECK(!r.sampled);

    VerifyReport miss = verify_for_all_colorings(g, 3, [&](const Coloring& c) {
        return c.color[1] == c.color[3];
    });
    CHECK(miss.total == 5);
    CHECK(miss.failures > 0);
    CHECK(!miss.failing.empty());
}

TEST_CASE("[verify] sampled campaigns are seed-deterministic") {
    Graph g = petersen();
    auto pred = [&](const Coloring& c) {
        return find_ktt_star(g, c, 3).has_value();
    };
    VerifyReport a = verify_sampled_colorings(g, 3, 12, 99, pred);
    VerifyReport b = verify_sampled_colorings(g, 3, 12, 99, pred);
    CHECK(a.total == 12);
    CHECK(a.sampled);
    CHECK(a.seed == 99);
    CHECK(a.failures == b.failures);
    CHECK(a.failing == b.failing);
    CHECK(a.failures == 0);
}

TEST_CASE("[tristar] K4 splits into two parts and the minimum replays") {
    TriStarResult r = triangle_star_partitions(complete(4));
    CHECK(r.parts == 2);
    CHECK(partition_valid(complete(4), r.witness));
    CHECK(r.witness.parts() == 2);
    CHECK(r.disjoint_optimum);
}

TEST_CASE("[tristar] minimum matches a set-partition scan on all 4-vertex graphs") {
    // Every block of every partition of the edge set is tested for being a
    // triangle or a star; the scan walks restricted growth strings.
    auto brute = [](const Graph& g) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < g.m; ++u)
            for (int v = u + 1; v < g.m; ++v)
                if (g.adjacent(u, v)) edges.push_back({u, v});
        int e = int(edges.size());
        if (e == 0) return 0;
        std::vector<int> block(e, 0);
        int best = e + 1;
        auto rec = [&](auto&& self, int i, int used) -> void {
            if (used >= best) return;
            if (i == e) {
                for (int b = 0; b < used; ++b) {
                    std::vector<std::pair<int, int>> part;
                    for (int j = 0; j < e; ++j)
                        if (block[j] == b) part.push_back(edges[j]);
                    std::set<int> vs;
                    for (auto [u, v] : part) {
                        vs.insert(u);
                        vs.insert(v);
                    }
                    bool triangle = part.size() == 3 && vs.size() == 3;
                    bool star = false;
                    for (int center : vs) {
                        bool all = true;
                        for (auto [u, v] : part)
                            if (u != center && v != center) all = false;
                        if (all) star = true;
                    }
                    if (!triangle && !star) return;
                }
                best = used;
                return;
            }
            for (int b = 0; b <= used && b < e; ++b) {
                block[i] = b;
                self(self, i + 1, std::max(used, b + 1));
            }
        };
        rec(rec, 0, 0);
        return best;
    };

    for (int mask = 1; mask < 64; ++mask) {
        Graph g(4);
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++bit)
                if (mask >> bit & 1) g.add_edge(u, v);
        TriStarResult r = triangle_star_partitions(g);
        CHECK(r.parts == brute(g));
        CHECK(partition_valid(g, r.witness));
        CHECK(r.witness.parts() == r.parts);
        CHECK(r.min_triangles <= r.max_triangles);
    }
    CHECK(triangle_star_partitions(cycle(5)).parts == brute(cycle(5)));
    CHECK(triangle_star_partitions(complete(5)).parts == brute(complete(5)));
}

TEST_CASE("[witness-json] round trips preserve every field") {
    BipartiteState s{{0, 2}, {5, 7}};
    BipartiteState s2 = bipartite_state_from_json(to_json_string(s));
    CHECK(s2.a == s.a);
    CHECK(s2.b == s.b);

    PathWitness p{2, {s, {{5, 7}, {0, 2}}}};
    PathWitness p2 = path_witness_from_json(to_json_string(p));
    CHECK(p2.t == 2);
    REQUIRE(p2.states.size() == 2);
    CHECK(p2.states[1].a == p.states[1].a);

    KttStarWitness k{2, {0, 3}, {4, 9}};
    KttStarWitness k2 = ktt_star_from_json(to_json_string(k));
    CHECK(k2.t == 2);
    CHECK(k2.a_side == k.a_side);
    CHECK(k2.b_side == k.b_side);

    FanLabeling l = first_sign_labeling(3);
    FanLabeling l2 = fan_labeling_from_json(to_json_string(l));
    CHECK(l2.n == 3);
    CHECK(l2.m == 3);
    CHECK(l2.label == l.label);

    CHECK_THROWS_AS(bipartite_state_from_json("{\"a\": [0]}"), InvalidInput);
    CHECK_THROWS_AS(fan_labeling_from_json("{\"n\": 2}"), InvalidInput);
}

TEST_CASE("[certificates] valid envelopes replay, tampered ones name the breach") {
    Graph g = petersen();
    json jg = jparse(g.to_json_string());

    SUBCASE("chi") {
        ChromaticResult r = chromatic_number(g);
        json params{{"graph", jg}};
        json witness{{"coloring", jparse(r.witness.to_json_string())}};
        CHECK(check_certificate(cert("chi", params, json(r.chi), witness)).ok);
        CheckOutcome bad =
            check_certificate(cert("chi", params, json(r.chi + 1), witness));
        CHECK(!bad.ok);
        CHECK(!bad.reason.empty());
    }

    SUBCASE("chic") {
        Graph c5 = cycle(5);
        CircularResult r = circular_chromatic_number(c5);
        json params{{"graph", jparse(c5.to_json_string())}};
        json value{{"p", r.value.p}, {"q", r.value.q}};
        json witness{{"residues", r.witness.color}};
        CHECK(check_certificate(cert("chic", params, value, witness)).ok);
        witness["residues"][0] = (r.witness.color[0] + 1) % r.value.p;
        CHECK(!check_certificate(cert("chic", params, value, witness)).ok);
    }

    SUBCASE("cd2") {
        Hypergraph h = complete_uniform(6, 2);
        DefectWitness w = cd2(h);
        json params{{"hypergraph", jparse(h.to_json_string())}};
        json removed = json::array(), side = json::array();
        for (int v = 0; v < h.n; ++v) {
            if (w.removed >> v & 1) removed.push_back(v + 1);
            if (w.first_side >> v & 1) side.push_back(v + 1);
        }
        json witness{{"removed", removed}, {"first_side", side}};
        CHECK(check_certificate(cert("cd2", params, json(w.value), witness)).ok);
        CHECK(!check_certificate(cert("cd2", params, json(w.value - 1), witness))
                   .ok);
    }

    SUBCASE("ktt names the failing adjacency pair") {
        Coloring c = kneser_min_coloring(5, 2);
        auto w = find_ktt_star(g, c, 3);
        REQUIRE(w.has_value());
        json params{{"graph", jg},
                    {"coloring", jparse(c.to_json_string())},
                    {"t", 3}};
        json witness = jparse(to_json_string(*w));
        CHECK(check_certificate(cert("ktt", params, json(nullptr), witness)).ok);

        std::vector<int> same_color;
        for (int v = 0; v < g.m; ++v)
            if (c.color[v] == c.color[w->a_side[0]] && v != w->a_side[0] &&
                std::count(w->b_side.begin(), w->b_side.end(), v) == 0)
                same_color.push_back(v);
        REQUIRE(!same_color.empty());
        bool named = false;
        for (int v : same_color) {
            json tampered = witness;
            tampered["a_side"][0] = v + 1;
            CheckOutcome out =
                check_certificate(cert("ktt", params, json(nullptr), tampered));
            if (out.ok) continue;
            named = out.reason.find("not adjacent") != std::string::npos;
            if (named) break;
        }
        CHECK(named);
    }

    SUBCASE("zigzag and path") {
        Coloring c = kneser_min_coloring(5, 2);
        json params{{"graph", jg},
                    {"coloring", jparse(c.to_json_string())},
                    {"t", 3}};
        auto z = find_zigzag(g, c, 3);
        REQUIRE(z.has_value());
        json zw = jparse(to_json_string(*z));
        CHECK(check_certificate(cert("zigzag", params, json(nullptr), zw)).ok);
        zw["a"][0] = zw["b"][0];
        CHECK(!check_certificate(cert("zigzag", params, json(nullptr), zw)).ok);

        auto p = find_path_of_subgraphs(g, c, 3);
        REQUIRE(p.has_value());
        json pw = jparse(to_json_string(*p));
        CHECK(check_certificate(cert("path", params, json(nullptr), pw)).ok);
        pw["states"].erase(pw["states"].size() - 1);
        CHECK(!check_certificate(cert("path", params, json(nullptr), pw)).ok);
    }

    SUBCASE("verify reports must be clean to pass") {
        json params{{"what", "ktt"}, {"t", 3}, {"graph", jg}};
        VerifyReport rep;
        rep.total = 20;
        rep.failures = 0;
        json value = jparse(to_json_string(rep));
        CHECK(check_certificate(cert("verify", params, value, json(nullptr))).ok);
        rep.failures = 1;
        rep.failing = {4};
        json dirty = jparse(to_json_string(rep));
        CHECK(!check_certificate(cert("verify", params, dirty, json(nullptr)))
                   .ok);
    }

    SUBCASE("unknown kinds are invalid input") {
        CHECK_THROWS_AS(
            check_certificate(cert("frobnicate", json::object(),
                                   json(nullptr), json(nullptr))),
            InvalidInput);
        CHECK_THROWS_AS(check_certificate("not json"), InvalidInput);
    }
}

TEST_CASE("[certificates] seeds survive the envelope round trip") {
    Graph c5 = cycle(5);
    ChromaticResult r = chromatic_number(c5);
    json params{{"graph", jparse(c5.to_json_string())}};
    json witness{{"coloring", jparse(r.witness.to_json_string())}};
    std::string env = make_certificate("chi", params.dump(),
                                       json(r.chi).dump(), witness.dump(), 42);
    json j = jparse(env);
    CHECK(j["seed"] == 42);
    CHECK(j["invariant"] == "chi");
    CHECK(check_certificate(env).ok);
}
