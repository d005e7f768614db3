#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "kneser/alternation.hpp"
#include "kneser/chromatic.hpp"
#include "kneser/circular.hpp"
#include "kneser/errors.hpp"
#include "kneser/families.hpp"
#include "kneser/graph.hpp"
#include "kneser/hypergraph.hpp"
#include "kneser/rng.hpp"
#include "kneser/sign_vector.hpp"
#include "kneser/two_coloring.hpp"

using namespace kneser;

namespace {

Hypergraph fano() {
    return Hypergraph::create(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                                  {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
}

// Minimum removal set making the rest 2-colorable, by scanning every removal
// subset (increasing size) against every side assignment.
int brute_cd2(const Hypergraph& h) {
    for (int size = 0; size <= h.n; ++size) {
        for (std::uint64_t rm = 0; rm < (std::uint64_t(1) << h.n); ++rm) {
            if (mask_count(rm) != size) continue;
            for (std::uint64_t side = 0; side < (std::uint64_t(1) << h.n);
                 ++side) {
                bool ok = true;
                for (std::uint64_t e : h.edges) {
                    if (e & rm) continue;
                    if ((e & side) == e || (e & side) == 0) {
                        ok = false;
                        break;
                    }
                }
                if (ok) return size;
            }
        }
    }
    return h.n;
}

int runs(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (s != prev) ++count;
        prev = s;
    }
    return count;
}

// alt through sigma straight from the definition: scan all sign vectors,
// keep the edge-free ones, and count sign runs in sigma order.
int brute_alt_sigma(const Hypergraph& h, const std::vector<int>& sigma) {
    int best = 0;
    for (std::size_t code = 0; code < pow3(h.n); ++code) {
        SignVector x = sv_decode(code, h.n);
        std::uint64_t plus = 0, minus = 0;
        for (int i = 0; i < h.n; ++i) {
            if (x.e[i] > 0) plus |= std::uint64_t(1) << sigma[i];
            if (x.e[i] < 0) minus |= std::uint64_t(1) << sigma[i];
        }
        bool free = true;
        for (std::uint64_t e : h.edges)
            if ((e & plus) == e || (e & minus) == e) {
                free = false;
                break;
            }
        if (!free) continue;
        std::vector<int> signs(x.e.begin(), x.e.end());
        best = std::max(best, runs(signs));
    }
    return best;
}

int brute_alt_min(const Hypergraph& h) {
    std::vector<int> sigma(h.n);
    std::iota(sigma.begin(), sigma.end(), 0);
    int best = h.n + 1;
    do {
        best = std::min(best, brute_alt_sigma(h, sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

} // namespace

TEST_CASE("[values] Kneser chromatic numbers match the closed form") {
    CHECK(chromatic_number(kneser_graph(complete_uniform(4, 2))).chi == 2);
    CHECK(chromatic_number(kneser_graph(complete_uniform(5, 2))).chi == 3);
    CHECK(chromatic_number(kneser_graph(complete_uniform(6, 2))).chi == 4);
    CHECK(chromatic_number(kneser_graph(complete_uniform(7, 3))).chi == 3);
}

TEST_CASE("[values] f-family chromatic numbers match n + m - 2k + 2") {
    for (auto [n, m, k] : {std::tuple{3, 1, 2}, {4, 2, 2}, {5, 1, 2}}) {
        Graph g = kneser_graph(f_nmk(n, m, k));
        CHECK(chromatic_number(g).chi == n + m - 2 * k + 2);
    }
}

TEST_CASE("[circular] values on odd cycles, Petersen, and a dense Kneser graph") {
    Graph c5(5), c7(7);
    for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
    for (int v = 0; v < 7; ++v) c7.add_edge(v, (v + 1) % 7);
    Graph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);

    CHECK(circular_chromatic_number(c5).value == Rational{5, 2});
    CHECK(circular_chromatic_number(c7).value == Rational{7, 3});
    CHECK(circular_chromatic_number(k4).value == Rational{4, 1});
    CHECK(circular_chromatic_number(kneser_graph(complete_uniform(5, 2))).value ==
          Rational{3, 1});
}

TEST_CASE("[circular] witnesses keep adjacent residues at circular distance q") {
    Graph c5(5);
    for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
    CircularResult r = circular_chromatic_number(c5);
    long long p = r.value.p, q = r.value.q;
    for (int u = 0; u < c5.m; ++u)
        for (int v = 0; v < c5.m; ++v) {
            if (!c5.adjacent(u, v)) continue;
            long long d = std::abs(r.witness.color[u] - r.witness.color[v]);
            d = std::min(d, p - d);
            CHECK(d >= q);
        }
}

TEST_CASE("[2col] the Fano plane is not 2-colorable but loses that after one deletion") {
    Hypergraph f = fano();
    CHECK(!is_2_colorable(f));
    CHECK(!find_2_coloring(f).has_value());
    CHECK(cd2(f).value == brute_cd2(f));

    Hypergraph ok = complete_uniform(4, 3);
    auto side = find_2_coloring(ok);
    REQUIRE(side.has_value());
    for (std::uint64_t e : ok.edges) {
        CHECK((e & *side) != e);
        CHECK((e & *side) != 0);
    }
}

TEST_CASE("[cd2] defect matches the brute subset scan") {
    for (const Hypergraph& h :
         {complete_uniform(4, 2), complete_uniform(5, 2), complete_uniform(6, 2),
          complete_uniform(7, 3), f_nmk(4, 1, 2), fano()}) {
        DefectWitness w = cd2(h);
        CHECK(w.value == brute_cd2(h));
        for (std::uint64_t e : h.edges) {
            if (e & w.removed) continue;
            CHECK((e & w.first_side) != e);
            CHECK((e & w.first_side) != 0);
        }
    }
}

TEST_CASE("[cd2] defect equals the chromatic number on the standard families") {
    for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 2}, {7, 3}}) {
        Hypergraph h = complete_uniform(n, k);
        CHECK(cd2(h).value == chromatic_number(kneser_graph(h)).chi);
    }
    for (auto [n, m, k] : {std::tuple{3, 1, 2}, {4, 2, 2}}) {
        Hypergraph h = f_nmk(n, m, k);
        CHECK(cd2(h).value == chromatic_number(kneser_graph(h)).chi);
    }
}

TEST_CASE("[alt] permutation minimum matches the exhaustive definition") {
    for (const Hypergraph& h :
         {complete_uniform(4, 2), complete_uniform(5, 2), f_nmk(3, 1, 2),
          Hypergraph::create(4, {{1, 3}, {2, 4}})}) {
        AltMinResult r = alt_min_exact(h);
        CHECK(r.exact);
        CHECK(r.value == brute_alt_min(h));
        CHECK(alt_sigma(h, r.sigma).value == r.value);
    }
}

TEST_CASE("[alt] the crossing pair needs three runs under every order") {
    Hypergraph h = Hypergraph::create(4, {{1, 3}, {2, 4}});
    CHECK(alt_min_exact(h).value == 3);
}

TEST_CASE("[alt] heuristic upper bound never beats the exact minimum") {
    Rng rng = make_rng(5);
    for (const Hypergraph& h : {complete_uniform(5, 2), f_nmk(3, 1, 2)}) {
        AltMinResult exact = alt_min_exact(h);
        AltMinResult rough = alt_min_heuristic(h, 50, rng);
        CHECK(!rough.exact);
        CHECK(rough.value >= exact.value);
        CHECK(alt_sigma(h, rough.sigma).value == rough.value);
    }
}

TEST_CASE("[alt] sigma evaluation agrees with brute force on fixed orders") {
    Hypergraph h = complete_uniform(5, 2);
    std::vector<int> sigma(5);
    std::iota(sigma.begin(), sigma.end(), 0);
    CHECK(alt_sigma(h, sigma).value == brute_alt_sigma(h, sigma));
    std::reverse(sigma.begin(), sigma.end());
    CHECK(alt_sigma(h, sigma).value == brute_alt_sigma(h, sigma));
    std::vector<int> mixed{2, 0, 4, 1, 3};
    CHECK(alt_sigma(h, mixed).value == brute_alt_sigma(h, mixed));
}

TEST_CASE("[nice] standard families are nice, the crossing pair is not") {
    for (auto [n, k] : {std::pair{5, 2}, {6, 2}, {7, 3}}) {
        Hypergraph h = complete_uniform(n, k);
        int chi = chromatic_number(kneser_graph(h)).chi;
        NicenessResult r = check_nice(h, chi);
        CHECK(r.nice);
        CHECK(alt_sigma(h, r.sigma).value == n - chi);
    }

    Hypergraph crossing = Hypergraph::create(4, {{1, 3}, {2, 4}});
    int chi = chromatic_number(kneser_graph(crossing)).chi;
    CHECK(chi == 2);
    CHECK(!check_nice(crossing, chi).nice);
}

TEST_CASE("[nice] partition matroids from the verification table are nice") {
    for (auto& [parts, caps] :
         {std::pair<std::vector<int>, std::vector<int>>{{3, 3}, {1, 1}},
          {{5}, {2}}}) {
        auto [h, two] = partition_matroid(parts, caps, 2);
        CHECK(two);
        int chi = chromatic_number(kneser_graph(h)).chi;
        CHECK(check_nice(h, chi).nice);
    }
}
