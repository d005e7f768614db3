#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "kneser/chen.hpp"
#include "kneser/chromatic.hpp"
#include "kneser/circuit.hpp"
#include "kneser/errors.hpp"
#include "kneser/families.hpp"
#include "kneser/fan.hpp"
#include "kneser/graph.hpp"
#include "kneser/hom.hpp"
#include "kneser/rng.hpp"
#include "kneser/sign_vector.hpp"
#include "kneser/xind.hpp"

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

bool alternates_from_negative(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b); });
    int want = -1;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0 && std::abs(labels[i]) == std::abs(labels[i - 1]))
            return false;
        if ((labels[i] > 0 ? 1 : -1) != want) return false;
        want = -want;
    }
    return true;
}

// Counts maximal chains with negative-alternating labels by extending the
// support one coordinate at a time.
std::uint64_t naive_chain_count(const FanLabeling& l) {
    std::uint64_t count = 0;
    SignVector x(l.n);
    std::vector<int> labels;
    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == l.n) {
            if (alternates_from_negative(labels)) ++count;
            return;
        }
        for (int i = 0; i < l.n; ++i) {
            if (x.e[i] != 0) continue;
            for (int s : {1, -1}) {
                x.e[i] = std::int8_t(s);
                labels.push_back(l.label[sv_encode(x)]);
                self(self, depth + 1);
                labels.pop_back();
                x.e[i] = 0;
            }
        }
    };
    dfs(dfs, 0);
    return count;
}

// Counts the pairs (A, B) of nonempty disjoint vertex sets joined completely
// by scanning all three-way vertex assignments.
long brute_hom_k2_count(const Graph& g) {
    long count = 0;
    std::vector<int> part(g.m, 0);
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == g.m) {
            bool has_a = false, has_b = false, complete_ab = true;
            for (int u = 0; u < g.m; ++u) {
                if (part[u] == 1) has_a = true;
                if (part[u] == 2) has_b = true;
            }
            if (!has_a || !has_b) return;
            for (int u = 0; u < g.m && complete_ab; ++u)
                for (int w = 0; w < g.m; ++w)
                    if (part[u] == 1 && part[w] == 2 && !g.adjacent(u, w)) {
                        complete_ab = false;
                        break;
                    }
            if (complete_ab) ++count;
            return;
        }
        for (int p : {0, 1, 2}) {
            part[v] = p;
            self(self, v + 1);
        }
        part[v] = 0;
    };
    dfs(dfs, 0);
    return count;
}

FanLabeling last_sign_labeling(int n) {
    FanLabeling l;
    l.n = n;
    l.m = n;
    l.label.assign(pow3(n), 0);
    for (std::size_t code = 1; code < pow3(n); ++code) {
        SignVector x = sv_decode(code, n);
        int sign = 0;
        for (int i = 0; i < n; ++i)
            if (x.e[i] != 0) sign = x.e[i];
        l.label[code] = sign * x.support_size();
    }
    return l;
}

} // namespace

TEST_CASE("[fan] the first-sign labeling is valid and its count is odd") {
    for (int n = 2; n <= 5; ++n) {
        FanLabeling l = first_sign_labeling(n);
        LabelingCheck lc = validate_labeling(l);
        CHECK(lc.ok);
        std::uint64_t fast = count_negative_alternating_chains(l);
        if (n <= 4) CHECK(fast == naive_chain_count(l));
        CHECK(fast % 2 == 1);
    }
}

TEST_CASE("[fan] random valid labelings keep the odd chain count") {
    Rng rng = make_rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        int n = 2 + rep % 3;
        FanLabeling l = random_valid_labeling(n, n, 4 * n, rng);
        CHECK(validate_labeling(l).ok);
        std::uint64_t fast = count_negative_alternating_chains(l);
        CHECK(fast == naive_chain_count(l));
        CHECK(fast % 2 == 1);
    }
}

TEST_CASE("[fan] the validator pinpoints each broken contract") {
    FanLabeling l = first_sign_labeling(3);
    SUBCASE("zero label") {
        std::size_t c = sv_encode(SignVector::parse("+00"));
        l.label[c] = 0;
        l.label[sv_negate_code(c, 3)] = 0;
    }
    SUBCASE("antipodality broken") {
        l.label[sv_encode(SignVector::parse("+-0"))] = 2;
        l.label[sv_encode(SignVector::parse("-+0"))] = 2;
    }
    SUBCASE("magnitude above the range") {
        std::size_t c = sv_encode(SignVector::parse("++0"));
        l.label[c] = 4;
        l.label[sv_negate_code(c, 3)] = -4;
    }
    SUBCASE("complementary comparable pair") {
        std::size_t c = sv_encode(SignVector::parse("++0"));
        l.label[c] = -1;
        l.label[sv_negate_code(c, 3)] = 1;
    }
    LabelingCheck lc = validate_labeling(l);
    CHECK(!lc.ok);
    CHECK(!lc.reason.empty());
}

TEST_CASE("[chen] chain pairs replay against first-sign and last-sign labelings") {
    for (int n = 2; n <= 5; ++n) {
        for (const FanLabeling& l :
             {first_sign_labeling(n), last_sign_labeling(n)}) {
            for (int gamma = 1; gamma <= n; ++gamma) {
                ChainPair cp = chen_chain_pair(l, gamma);
                CHECK(chain_pair_valid(n, l.label, gamma, cp));
                CHECK(cp.gamma == gamma);
                CHECK(cp.z == cp.xs[gamma - 1]);
                for (int i = 1; i <= n; ++i) {
                    int want = (i % 2 == 1 ? -i : i);
                    CHECK(l.label[cp.xs[i - 1]] == want);
                    std::size_t ye = cp.ys[i - 1];
                    if (i == gamma)
                        CHECK(ye == sv_negate_code(cp.xs[i - 1], n));
                    else
                        CHECK(l.label[ye] == want);
                }
            }
        }
    }
}

TEST_CASE("[chen] tampered chain pairs are rejected") {
    FanLabeling l = first_sign_labeling(4);
    ChainPair cp = chen_chain_pair(l, 2);
    REQUIRE(chain_pair_valid(4, l.label, 2, cp));

    ChainPair bad = cp;
    std::swap(bad.xs[0], bad.xs[1]);
    CHECK(!chain_pair_valid(4, l.label, 2, bad));

    bad = cp;
    bad.z = bad.ys[1];
    CHECK(!chain_pair_valid(4, l.label, 2, bad));

    bad = cp;
    bad.ys[1] = bad.xs[1];
    CHECK(!chain_pair_valid(4, l.label, 2, bad));

    CHECK(!chain_pair_valid(4, l.label, 3, cp));
}

TEST_CASE("[chen] aligned chain counting matches a direct enumeration") {
    for (int n = 2; n <= 4; ++n) {
        FanLabeling l = first_sign_labeling(n);
        std::uint64_t direct = 0;
        SignVector x(n);
        std::vector<int> labels;
        auto dfs = [&](auto&& self, int depth) -> void {
            if (depth == n) {
                bool ok = true;
                for (int i = 1; i <= n; ++i)
                    if (labels[i - 1] != (i % 2 == 1 ? -i : i)) ok = false;
                if (ok) ++direct;
                return;
            }
            for (int i = 0; i < n; ++i) {
                if (x.e[i] != 0) continue;
                for (int s : {1, -1}) {
                    x.e[i] = std::int8_t(s);
                    labels.push_back(l.label[sv_encode(x)]);
                    self(self, depth + 1);
                    labels.pop_back();
                    x.e[i] = 0;
                }
            }
        };
        dfs(dfs, 0);
        CHECK(count_aligned_chains(n, l.label) == direct);
    }
}

TEST_CASE("[circuit] the symmetric circuit is negation-closed and consistent") {
    for (int n = 3; n <= 4; ++n) {
        FanLabeling l = first_sign_labeling(n);
        FanCircuit c = fan_symmetric_circuit(l);
        REQUIRE(c.chains.size() >= 2);
        REQUIRE(c.alternating.size() == c.chains.size());

        std::set<MaximalChain> seen(c.chains.begin(), c.chains.end());
        CHECK(seen.size() == c.chains.size());
        int flagged = 0;
        for (std::size_t i = 0; i < c.chains.size(); ++i) {
            const MaximalChain& ch = c.chains[i];
            REQUIRE(int(ch.size()) == n);
            for (int d = 0; d < n; ++d) {
                SignVector x = sv_decode(ch[d], n);
                CHECK(x.support_size() == d + 1);
                if (d > 0) CHECK(sv_decode(ch[d - 1], n).below(x));
            }
            MaximalChain neg;
            for (std::size_t code : ch) neg.push_back(sv_negate_code(code, n));
            CHECK(seen.count(neg) == 1);

            std::vector<int> labels;
            for (std::size_t code : ch) labels.push_back(l.label[code]);
            std::vector<int> flipped;
            for (int v : labels) flipped.push_back(-v);
            bool alternating = alternates_from_negative(labels) ||
                               alternates_from_negative(flipped);
            CHECK(alternating == bool(c.alternating[i]));
            if (alternating) ++flagged;

            const MaximalChain& next = c.chains[(i + 1) % c.chains.size()];
            int shared = 0;
            for (std::size_t code : ch)
                shared += std::count(next.begin(), next.end(), code);
            CHECK(shared == n - 1);
        }
        CHECK(c.alternating_count == flagged);
        CHECK(c.alternating_count >= 2);
    }
}

TEST_CASE("[hom] poset sizes match the assignment scan and the known table") {
    std::vector<std::pair<Graph, long>> table;
    table.push_back({complete(2), 2});
    table.push_back({cycle(5), 20});
    table.push_back({complete(4), 50});
    table.push_back({complete(6), 602});
    table.push_back({kneser_graph(complete_uniform(5, 2)), 110});
    for (auto& [g, expect] : table) {
        CHECK(brute_hom_k2_count(g) == expect);
        HomK2 hom = hom_k2(g);
        CHECK(long(hom.poset.size) == expect);
        CHECK(long(hom_k2_count(g)) == expect);
        CHECK(hom.elements.size() == std::size_t(expect));
    }
}

TEST_CASE("[hom] elements are ordered by componentwise inclusion") {
    Graph c5 = cycle(5);
    HomK2 hom = hom_k2(c5);
    for (std::size_t i = 0; i < hom.elements.size(); ++i)
        for (std::size_t j = 0; j < hom.elements.size(); ++j) {
            auto [a1, b1] = hom.elements[i];
            auto [a2, b2] = hom.elements[j];
            bool strictly_below =
                i != j && (a1 & ~a2) == 0 && (b1 & ~b2) == 0;
            CHECK(hom.poset.less(int(i), int(j)) == strictly_below);
        }
    for (std::size_t i = 0; i < hom.elements.size(); ++i) {
        auto [a, b] = hom.elements[i];
        int swapped = hom.find(b, a);
        REQUIRE(swapped >= 0);
        CHECK(hom.poset.nu[i] == swapped);
    }
}

TEST_CASE("[xind] bracket values on the smallest named graphs") {
    std::vector<std::pair<Graph, int>> table;
    table.push_back({complete(2), 0});
    table.push_back({cycle(5), 1});
    table.push_back({complete(4), 2});
    table.push_back({kneser_graph(complete_uniform(5, 2)), 1});
    for (auto& [g, expect] : table) {
        HomK2 hom = hom_k2(g);
        XindResult r = xind_exact(hom.poset);
        CHECK(r.exact);
        CHECK(r.lower == expect);
        CHECK(r.upper == expect);
        CHECK(ladder_map_valid(hom.poset, r.witness));
        CHECK(r.witness.s == expect);

        CompressionResult comp = xind_upper(hom.poset);
        CHECK(comp.upper >= expect);
        CHECK(ladder_map_valid(hom.poset, comp.map));

        CHECK(chromatic_number(g).chi >= expect + 2);
    }
}

TEST_CASE("[xind] tampered ladder maps fail validation") {
    HomK2 hom = hom_k2(cycle(5));
    XindResult r = xind_exact(hom.poset);
    REQUIRE(ladder_map_valid(hom.poset, r.witness));

    LadderMap bad = r.witness;
    bad.label[0] = -bad.label[0];
    CHECK(!ladder_map_valid(hom.poset, bad));

    bad = r.witness;
    bad.label[3] = bad.s + 5;
    CHECK(!ladder_map_valid(hom.poset, bad));
}

TEST_CASE("[xind] feasibility search agrees with the exact bracket") {
    for (const Graph& g : {cycle(5), complete(4)}) {
        HomK2 hom = hom_k2(g);
        XindResult r = xind_exact(hom.poset);
        REQUIRE(r.exact);
        bool complete_search = false;
        std::uint64_t nodes = 0;
        LadderMap out;
        CHECK(ladder_feasible(hom.poset, r.upper, 10000000, complete_search,
                              nodes, &out));
        CHECK(ladder_map_valid(hom.poset, out));
        CHECK(out.s == r.upper);
        if (r.upper > 0) {
            CHECK(!ladder_feasible(hom.poset, r.upper - 1, 10000000,
                                   complete_search, nodes, nullptr));
            CHECK(complete_search);
        }
    }
}
