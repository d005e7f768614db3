#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "kneser/alternation.hpp"
#include "kneser/chromatic.hpp"
#include "kneser/errors.hpp"
#include "kneser/families.hpp"
#include "kneser/graph.hpp"
#include "kneser/hypergraph.hpp"
#include "kneser/rng.hpp"
#include "kneser/sign_vector.hpp"

using namespace kneser;

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

bool proper(const Graph& g, const std::vector<int>& color) {
    for (int u = 0; u < g.m; ++u)
        for (int v = u + 1; v < g.m; ++v)
            if (g.adjacent(u, v) && color[u] == color[v]) return false;
    return true;
}

bool first_use_order(const std::vector<int>& color) {
    int next = 1;
    for (int c : color) {
        if (c == next)
            ++next;
        else if (c >= next)
            return false;
    }
    return true;
}

// Counts surjective proper colorings in first-use order by walking the full
// t^m assignment space.
long brute_canonical_count(const Graph& g, int t) {
    std::vector<int> color(g.m, 1);
    long count = 0;
    while (true) {
        bool surjective = true;
        for (int c = 1; c <= t; ++c)
            if (std::find(color.begin(), color.end(), c) == color.end())
                surjective = false;
        if (surjective && first_use_order(color) && proper(g, color)) ++count;
        int i = g.m - 1;
        while (i >= 0 && color[i] == t) color[i--] = 1;
        if (i < 0) break;
        ++color[i];
    }
    return count;
}

int brute_chromatic(const Graph& g) {
    for (int t = 1; t <= g.m; ++t)
        if (brute_canonical_count(g, t) > 0) return t;
    return g.m;
}

} // namespace

TEST_CASE("[sign] encode/decode round trip and negation") {
    int n = 3;
    for (std::size_t code = 0; code < pow3(n); ++code) {
        SignVector x = sv_decode(code, n);
        CHECK(sv_encode(x) == code);
        CHECK(SignVector::parse(x.str()) == x);
        CHECK(sv_decode(sv_negate_code(code, n), n) == x.negated());
        CHECK(x.negated().negated() == x);
    }
    CHECK(SignVector::parse("+-0+").str() == "+-0+");
    CHECK_THROWS_AS(SignVector::parse("+x"), InvalidInput);
}

TEST_CASE("[sign] below is the coordinatewise refinement order") {
    SignVector a = SignVector::parse("+00");
    SignVector b = SignVector::parse("+-0");
    SignVector c = SignVector::parse("+-+");
    CHECK(a.below(b));
    CHECK(b.below(c));
    CHECK(a.below(c));
    CHECK(!b.below(a));
    CHECK(!SignVector::parse("-00").below(b));
    CHECK(SignVector(3).below(a));
}

TEST_CASE("[sign] alternation counts maximal sign runs") {
    CHECK(alt_of(SignVector::parse("000")) == 0);
    CHECK(alt_of(SignVector::parse("+")) == 1);
    CHECK(alt_of(SignVector::parse("++00++")) == 1);
    CHECK(alt_of(SignVector::parse("+-")) == 2);
    CHECK(alt_of(SignVector::parse("+0-")) == 2);
    CHECK(alt_of(SignVector::parse("+-+-")) == 4);
    CHECK(alt_of(SignVector::parse("0+0-0+0")) == 3);
    CHECK(alt_of(SignVector::parse("--++--")) == 3);
}

TEST_CASE("[json] graph round trip and rejection of malformed input") {
    Graph g = cycle(5);
    Graph back = Graph::from_json_string(g.to_json_string());
    CHECK(back.m == 5);
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v) CHECK(back.adjacent(u, v) == g.adjacent(u, v));

    CHECK_THROWS_AS(Graph::from_json_string("{\"m\": 2}"), InvalidInput);
    CHECK_THROWS_AS(Graph::from_json_string("not json"), InvalidInput);
    CHECK_THROWS_AS(Graph::from_json_string("{\"m\":2,\"adj\":[[0,1]]}"),
                    InvalidInput);
    CHECK_THROWS_AS(Graph::from_json_string("{\"m\":2,\"adj\":[[1,1]]}"),
                    InvalidInput);
    CHECK_THROWS_AS(Graph::from_json_string("{\"m\":2,\"adj\":[[1,2],[2,1]]}"),
                    InvalidInput);
}

TEST_CASE("[json] hypergraph round trip keeps the canonical edge order") {
    Hypergraph h = Hypergraph::create(4, {{2, 4}, {1, 3}});
    CHECK(h.edges.size() == 2);
    CHECK(h.edge_vertices(0) == std::vector<int>{1, 3});
    CHECK(h.edge_vertices(1) == std::vector<int>{2, 4});
    Hypergraph back = Hypergraph::from_json_string(h.to_json_string());
    CHECK(back.n == h.n);
    CHECK(back.edges == h.edges);
    CHECK_THROWS_AS(Hypergraph::create(4, {{1, 1}}), InvalidInput);
    CHECK_THROWS_AS(Hypergraph::create(4, {{0, 2}}), InvalidInput);
    CHECK_THROWS_AS(Hypergraph::from_json_string("{\"n\":70,\"edges\":[]}"),
                    InvalidInput);
}

TEST_CASE("[json] coloring round trip and the first-use-order predicate") {
    Coloring c{3, {1, 2, 1, 3}};
    Coloring back = Coloring::from_json_string(c.to_json_string());
    CHECK(back.t == 3);
    CHECK(back.color == c.color);
    CHECK(c.canonical());
    CHECK(c.surjective());
    CHECK(!Coloring{3, {2, 1, 3, 1}}.canonical());
    CHECK(!Coloring{3, {1, 1, 2, 2}}.surjective());
    CHECK(Coloring{2, {1, 2, 1, 2}}.proper_on(cycle(4)));
    CHECK(!Coloring{2, {1, 2, 2, 2}}.proper_on(cycle(4)));
}

TEST_CASE("[kneser] vertices are hyperedges in order, adjacency is disjointness") {
    Hypergraph h = complete_uniform(4, 2);
    Graph g = kneser_graph(h);
    CHECK(g.m == 6);
    CHECK(g.edge_count() == 3);
    for (int i = 0; i < g.m; ++i) {
        CHECK(g.edge_labels[i] == h.edges[i]);
        for (int j = 0; j < g.m; ++j)
            CHECK(g.adjacent(i, j) == (i != j && (h.edges[i] & h.edges[j]) == 0));
    }
}

TEST_CASE("[product] tuples are row-major and adjacency holds coordinatewise") {
    Graph p2 = complete(2);
    Graph p3 = cycle(3);
    Graph prod = categorical_product({p2, p3});
    REQUIRE(prod.m == 6);
    for (int i = 0; i < prod.m; ++i) {
        REQUIRE(prod.tuple_labels[i].size() == 2);
        CHECK(prod.tuple_labels[i][0] == i / 3);
        CHECK(prod.tuple_labels[i][1] == i % 3);
    }
    for (int i = 0; i < prod.m; ++i)
        for (int j = 0; j < prod.m; ++j) {
            bool expect = p2.adjacent(i / 3, j / 3) && p3.adjacent(i % 3, j % 3);
            CHECK(prod.adjacent(i, j) == expect);
        }
}

TEST_CASE("[chromatic] exact solver matches brute force on small graphs") {
    for (const Graph& g : {cycle(4), cycle(5), cycle(7), complete(4),
                           kneser_graph(complete_uniform(5, 2))}) {
        ChromaticResult r = chromatic_number(g);
        CHECK(r.chi == brute_chromatic(g));
        CHECK(int(r.witness.color.size()) == g.m);
        CHECK(r.witness.t == r.chi);
        CHECK(r.witness.proper_on(g));
        CHECK(r.witness.surjective());
    }
}

TEST_CASE("[chromatic] canonical enumeration matches the assignment scan") {
    Graph c5 = cycle(5);
    CHECK(brute_canonical_count(c5, 3) == 5);
    long seen = 0;
    for_each_canonical_coloring(c5, 3, [&](const Coloring& c) {
        CHECK(c.proper_on(c5));
        CHECK(c.surjective());
        CHECK(c.canonical());
        ++seen;
        return true;
    });
    CHECK(seen == 5);

    Graph pet = kneser_graph(complete_uniform(5, 2));
    CHECK(brute_canonical_count(pet, 3) == 20);
    CHECK(long(all_canonical_colorings(pet, 3).size()) == 20);
}

TEST_CASE("[chromatic] enumeration can stop early") {
    Graph pet = kneser_graph(complete_uniform(5, 2));
    long seen = 0;
    for_each_canonical_coloring(pet, 3, [&](const Coloring&) {
        return ++seen < 7;
    });
    CHECK(seen == 7);
}

TEST_CASE("[chromatic] sampling is deterministic, proper, and surjective") {
    Graph pet = kneser_graph(complete_uniform(5, 2));
    Rng r1 = make_rng(11), r2 = make_rng(11), r3 = make_rng(12);
    Coloring a = sample_coloring(pet, 3, r1);
    Coloring b = sample_coloring(pet, 3, r2);
    Coloring c = sample_coloring(pet, 4, r3);
    CHECK(a.color == b.color);
    for (const Coloring& col : {a, c}) {
        CHECK(col.proper_on(pet));
        CHECK(col.surjective());
        for (int v : col.color) {
            CHECK(v >= 1);
            CHECK(v <= col.t);
        }
    }
    CHECK_THROWS_AS(sample_coloring(pet, 2, r1), InvalidInput);
}

TEST_CASE("[families] complete uniform, f, and partition matroid shapes") {
    CHECK(complete_uniform(6, 2).edges.size() == 15);
    CHECK(complete_uniform(7, 3).edges.size() == 35);

    Hypergraph f = f_nmk(4, 2, 2);
    CHECK(f.n == 6);
    CHECK(f.edges.size() == 6 + 8 + 1);

    auto [pm, two] = partition_matroid({3, 3}, {1, 1}, 2);
    CHECK(pm.n == 6);
    CHECK(pm.edges.size() == 9);
    CHECK(two);
    for (std::uint64_t e : pm.edges) {
        CHECK(mask_count(e & 0x07) <= 1);
        CHECK(mask_count(e & 0x38) <= 1);
    }

    auto [star, two2] = partition_matroid({4, 1}, {1, 1}, 2);
    CHECK(star.edges.size() == 4);
    CHECK(!two2);

    CHECK_THROWS_AS(partition_matroid({2, 3}, {1, 1}, 2), InvalidInput);
}

TEST_CASE("[families] the built-in Kneser coloring is optimal") {
    for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 2}, {7, 3}}) {
        Graph g = kneser_graph(complete_uniform(n, k));
        Coloring c = kneser_min_coloring(n, k);
        CHECK(c.t == n - 2 * k + 2);
        CHECK(c.proper_on(g));
        CHECK(c.surjective());
        CHECK(chromatic_number(g).chi == c.t);
    }
}

TEST_CASE("[families] random graphs are seeded and never edgeless") {
    Rng r1 = make_rng(3), r2 = make_rng(3);
    for (int i = 0; i < 20; ++i) {
        Graph a = random_graph(6, 0.3, r1);
        Graph b = random_graph(6, 0.3, r2);
        CHECK(a.edge_count() == b.edge_count());
        CHECK(a.edge_count() >= 1);
    }
}
