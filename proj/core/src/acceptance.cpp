#include "kneser/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "kneser/alternation.hpp"
#include "kneser/chen.hpp"
#include "kneser/chromatic.hpp"
#include "kneser/circular.hpp"
#include "kneser/colorful.hpp"
#include "kneser/errors.hpp"
#include "kneser/families.hpp"
#include "kneser/fan.hpp"
#include "kneser/graph.hpp"
#include "kneser/hom.hpp"
#include "kneser/hypergraph.hpp"
#include "kneser/product_labeling.hpp"
#include "kneser/rng.hpp"
#include "kneser/sign_vector.hpp"
#include "kneser/tristar.hpp"
#include "kneser/two_coloring.hpp"
#include "kneser/witness_search.hpp"
#include "kneser/xind.hpp"

namespace kneser {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Rng criterion_rng(std::uint64_t seed, int index) {
    return make_rng(seed * 1000 + std::uint64_t(index));
}

Graph cycle_graph(int m) {
    Graph g(m);
    for (int v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
    return g;
}

Graph complete_graph(int m) {
    Graph g(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

// 1. chi(KG(n,k)) and cd2 agree with n - 2k + 2 on the four pinned instances.
CriterionResult criterion_kneser_values() {
    CriterionResult r{1, "kneser-values", false, "", 0.0, 60.0}; // per instance
    struct Case { int n, k, expect; };
    const std::array<Case, 4> cases{{{4, 2, 2}, {5, 2, 3}, {6, 2, 4}, {7, 3, 3}}};
    std::ostringstream d;
    bool ok = true;
    double worst = 0.0;
    for (const auto& c : cases) {
        auto t0 = Clock::now();
        Hypergraph h = complete_uniform(c.n, c.k);
        int chi = chromatic_number(kneser_graph(h)).chi;
        int defect = cd2(h).value;
        worst = std::max(worst, elapsed(t0));
        if (chi != c.expect || defect != c.expect) {
            ok = false;
            d << " KG(" << c.n << "," << c.k << "): chi=" << chi
              << " cd2=" << defect << " want " << c.expect << ";";
        }
    }
    if (worst >= r.limit_seconds) {
        ok = false;
        d << " slowest instance over the per-instance limit;";
    }
    if (ok) d << "chi = cd2 = {2,3,4,3} on (4,2),(5,2),(6,2),(7,3)";
    r.pass = ok;
    r.detail = d.str();
    return r;
}

// 2. Every canonical optimal coloring of KG(5,2) and KG(6,2) contains a
// colorful crossed K_{t,t}, found by the brute-force searcher.
CriterionResult criterion_ktt_exhaustive() {
    CriterionResult r{2, "ktt-exhaustive", false, "", 0.0, 10.0}; // KG(5,2) part
    Graph g52 = kneser_graph(complete_uniform(5, 2));
    auto t0 = Clock::now();
    VerifyReport rep52 = verify_for_all_colorings(g52, 3, [&](const Coloring& c) {
        auto w = find_ktt_star(g52, c, 3);
        return w && ktt_star_valid(g52, c, *w);
    });
    double sec52 = elapsed(t0);

    Graph g62 = kneser_graph(complete_uniform(6, 2));
    VerifyReport rep62 = verify_for_all_colorings(g62, 4, [&](const Coloring& c) {
        auto w = find_ktt_star(g62, c, 4);
        return w && ktt_star_valid(g62, c, *w);
    });

    bool ok = rep52.total == 20 && rep52.failures == 0 && sec52 < r.limit_seconds
              && rep62.total >= 1 && rep62.failures == 0;
    std::ostringstream d;
    d << "KG(5,2): " << (rep52.total - rep52.failures) << "/" << rep52.total
      << ", KG(6,2): " << (rep62.total - rep62.failures) << "/" << rep62.total;
    if (rep52.total != 20) d << " (expected 20 canonical colorings of KG(5,2))";
    if (sec52 >= r.limit_seconds) d << " (KG(5,2) part over its time limit)";
    r.pass = ok;
    r.detail = d.str();
    return r;
}

// 3. 100 sampled proper 3-colorings of KG(5,2) x KG(5,2): the labeling-based
// extraction yields a replay-valid witness every time.
CriterionResult criterion_product_sampled(std::uint64_t seed) {
    CriterionResult r{3, "product-sampled", false, "", 0.0, 30.0}; // per extraction
    Hypergraph ku = complete_uniform(5, 2);
    Graph factor = kneser_graph(ku);
    Graph prod = categorical_product({factor, factor});
    Rng rng = criterion_rng(seed, 3);
    int valid = 0;
    double worst = 0.0;
    std::string why;
    for (int i = 0; i < 100; ++i) {
        Coloring c = sample_coloring(prod, 3, rng);
        auto t0 = Clock::now();
        try {
            auto ctx = ProductLabelingContext::build({ku, ku}, c);
            KttStarWitness w = extract_ktt_star(ctx);
            if (ktt_star_valid(ctx.product, ctx.coloring, w))
                ++valid;
            else if (why.empty())
                why = "replay failed on sample " + std::to_string(i + 1);
        } catch (const std::exception& e) {
            if (why.empty())
                why = "sample " + std::to_string(i + 1) + ": " + e.what();
        }
        worst = std::max(worst, elapsed(t0));
    }
    bool ok = valid == 100 && worst < r.limit_seconds;
    std::ostringstream d;
    d << valid << "/100 extractions replay-valid";
    if (!why.empty()) d << "; first failure: " << why;
    if (worst >= r.limit_seconds) d << "; slowest extraction over the limit";
    r.pass = ok;
    r.detail = d.str();
    return r;
}

// Flat enumeration of all maximal chains (one signed coordinate added per
// step), counting those whose label set alternates in sign from minus when
// sorted by magnitude. Independent of the pruned counter under test.
std::uint64_t naive_negative_alternating_count(const FanLabeling& l) {
    std::uint64_t count = 0;
    SignVector x(l.n);
    std::vector<int> labels;
    labels.reserve(l.n);
    std::function<void()> extend = [&]() {
        if (int(labels.size()) == l.n) {
            std::vector<int> s = labels;
            std::sort(s.begin(), s.end(),
                      [](int a, int b) { return std::abs(a) < std::abs(b); });
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i > 0 && std::abs(s[i]) == std::abs(s[i - 1])) return;
                bool want_negative = i % 2 == 0;
                if ((s[i] < 0) != want_negative) return;
            }
            ++count;
            return;
        }
        for (int p = 0; p < l.n; ++p) {
            if (x.e[p] != 0) continue;
            for (int sign : {1, -1}) {
                x.e[p] = std::int8_t(sign);
                labels.push_back(l.at(x));
                extend();
                labels.pop_back();
                x.e[p] = 0;
            }
        }
    };
    extend();
    return count;
}

// 4. The pruned chain counter matches the flat enumeration and is odd on 200
// random valid labelings.
CriterionResult criterion_fan_oddness(std::uint64_t seed) {
    CriterionResult r{4, "fan-oddness", false, "", 0.0, 60.0}; // total
    Rng rng = criterion_rng(seed, 4);
    auto t0 = Clock::now();
    int done = 0;
    bool ok = true;
    std::string why;
    for (int n = 2; n <= 5 && ok; ++n) {
        for (int rep = 0; rep < 50 && ok; ++rep) {
            int m = rep % 2 == 0 ? n : n + 2;
            FanLabeling l = random_valid_labeling(n, m, 4 * n, rng);
            std::uint64_t fast = count_negative_alternating_chains(l);
            std::uint64_t slow = naive_negative_alternating_count(l);
            ++done;
            if (fast != slow) {
                ok = false;
                why = "counter mismatch at n=" + std::to_string(n) + " ("
                      + std::to_string(fast) + " vs " + std::to_string(slow) + ")";
            } else if (fast % 2 == 0) {
                ok = false;
                why = "even count " + std::to_string(fast) + " at n=" + std::to_string(n);
            }
        }
    }
    double sec = elapsed(t0);
    if (sec >= r.limit_seconds) {
        ok = false;
        why = "over the total time limit";
    }
    std::ostringstream d;
    d << done << "/200 labelings odd and cross-checked";
    if (!why.empty()) d << "; " << why;
    r.pass = ok;
    r.detail = d.str();
    return r;
}

// Random antipodal order-preserving labeling into magnitudes 1..n such that
// no comparable pair carries two labels of magnitude gamma. Starts from the
// first-sign labeling and keeps only mutations that survive a full scan of
// the comparability relation.
std::vector<int> random_order_preserving_labels(int n, int gamma, int changes,
                                                Rng& rng) {
    const std::size_t total = pow3(n);
    std::vector<SignVector> dec(total);
    std::vector<int> labels(total, 0);
    for (std::size_t c = 1; c < total; ++c) {
        dec[c] = sv_decode(c, n);
        int sign = 0;
        for (int i = 0; i < n && sign == 0; ++i) sign = dec[c].e[i];
        labels[c] = sign * dec[c].support_size();
    }
    std::uniform_int_distribution<std::size_t> pick(1, total - 1);
    std::uniform_int_distribution<int> magnitude(1, n);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int a = 0; a < changes; ++a) {
        std::size_t c = pick(rng);
        std::size_t nc = sv_negate_code(c, n);
        int v = magnitude(rng) * (coin(rng) ? 1 : -1);
        int old = labels[c];
        labels[c] = v;
        labels[nc] = -v;
        bool ok = true;
        for (std::size_t u = 1; u < total && ok; ++u) {
            if (u == c) continue;
            bool below = dec[u].below(dec[c]);
            bool above = dec[c].below(dec[u]);
            if (!below && !above) continue;
            int lo = below ? labels[u] : labels[c];
            int hi = below ? labels[c] : labels[u];
            if (lo != hi && std::abs(lo) >= std::abs(hi)) ok = false;
            if (std::abs(labels[u]) == gamma && std::abs(labels[c]) == gamma)
                ok = false;
        }
        if (!ok) {
            labels[c] = old;
            labels[nc] = -old;
        }
    }
    return labels;
}

// 5. The flip construction delivers a valid chain pair on 50 random
// order-preserving labelings with the gamma property.
CriterionResult criterion_chain_pairs(std::uint64_t seed) {
    CriterionResult r{5, "chain-pairs", false, "", 0.0, 0.0};
    Rng rng = criterion_rng(seed, 5);
    std::uniform_int_distribution<int> pick_n(2, 5);
    int done = 0;
    bool ok = true;
    std::string why;
    for (int i = 0; i < 50 && ok; ++i) {
        int n = pick_n(rng);
        std::uniform_int_distribution<int> pick_gamma(1, n);
        int gamma = pick_gamma(rng);
        auto labels = random_order_preserving_labels(n, gamma, 6 * n, rng);
        try {
            ChainPair cp = chen_chain_pair(n, labels, gamma);
            if (!chain_pair_valid(n, labels, gamma, cp)) {
                ok = false;
                why = "invalid chain pair at n=" + std::to_string(n)
                      + " gamma=" + std::to_string(gamma);
            }
        } catch (const std::exception& e) {
            ok = false;
            why = "n=" + std::to_string(n) + " gamma=" + std::to_string(gamma)
                  + ": " + e.what();
        }
        ++done;
    }
    std::ostringstream d;
    d << done << "/50 chain pairs valid";
    if (!why.empty()) d << "; " << why;
    r.pass = ok;
    r.detail = d.str();
    return r;
}

// 6. Exact circular chromatic numbers of C5, Petersen, KG(6,2).
CriterionResult criterion_circular_values() {
    CriterionResult r{6, "circular-values", false, "", 0.0, 60.0}; // per instance
    struct Case { const char* name; Graph g; Rational want; };
    std::array<Case, 3> cases{{
        {"C5", cycle_graph(5), Rational{5, 2}},
        {"Petersen", kneser_graph(complete_uniform(5, 2)), Rational{3, 1}},
        {"KG(6,2)", kneser_graph(complete_uniform(6, 2)), Rational{4, 1}},
    }};
    std::ostringstream d;
    bool ok = true;
    double worst = 0.0;
    for (auto& c : cases) {
        auto t0 = Clock::now();
        CircularResult res = circular_chromatic_number(c.g);
        worst = std::max(worst, elapsed(t0));
        if (!(res.value == c.want)) {
            ok = false;
            d << " " << c.name << ": got " << res.value.str() << " want "
              << c.want.str() << ";";
        }
    }
    if (worst >= r.limit_seconds) {
        ok = false;
        d << " slowest instance over the per-instance limit;";
    }
    if (ok) d << "5/2, 3/1, 4/1 as expected";
    r.pass = ok;
    r.detail = d.str();
    return r;
}

// All graphs on at most max_n vertices up to isomorphism, via canonical
// (minimal) edge masks over all vertex permutations.
std::vector<Graph> small_graph_catalog(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> slots;
        std::vector<std::vector<int>> slot_of(n, std::vector<int>(n, -1));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                slot_of[i][j] = slot_of[j][i] = int(slots.size());
                slots.emplace_back(i, j);
            }
        std::vector<std::vector<int>> slot_perms;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> sp(slots.size());
            for (std::size_t s = 0; s < slots.size(); ++s)
                sp[s] = slot_of[perm[slots[s].first]][perm[slots[s].second]];
            slot_perms.push_back(std::move(sp));
        } while (std::next_permutation(perm.begin(), perm.end()));
        int e = int(slots.size());
        for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
            bool canonical = true;
            for (const auto& sp : slot_perms) {
                std::uint32_t image = 0;
                for (int s = 0; s < e; ++s)
                    if (mask >> s & 1) image |= std::uint32_t(1) << sp[s];
                if (image < mask) {
                    canonical = false;
                    break;
                }
            }
            if (!canonical) continue;
            Graph g(n);
            for (int s = 0; s < e; ++s)
                if (mask >> s & 1) g.add_edge(slots[s].first, slots[s].second);
            out.push_back(std::move(g));
        }
    }
    return out;
}

// 7. Cross-index of Hom(K2, -) for K2, C5, K4, the compression bound on the
// same three, and chi >= Xind + 2 across the catalog of graphs on <= 6
// vertices.
CriterionResult criterion_cross_index() {
    CriterionResult r{7, "cross-index", false, "", 0.0, 0.0};
    struct Case { const char* name; Graph g; int expect; };
    std::array<Case, 3> cases{{
        {"K2", complete_graph(2), 0},
        {"C5", cycle_graph(5), 1},
        {"K4", complete_graph(4), 2},
    }};
    std::ostringstream d;
    bool ok = true;
    for (auto& c : cases) {
        HomK2 hom = hom_k2(c.g);
        XindResult xr = xind_exact(hom.poset);
        CompressionResult cu = xind_upper(hom.poset);
        if (!xr.exact || xr.lower != c.expect || xr.upper != c.expect) {
            ok = false;
            d << " " << c.name << ": exact value [" << xr.lower << ","
              << xr.upper << "] want " << c.expect << ";";
        }
        if (cu.upper != c.expect) {
            ok = false;
            d << " " << c.name << ": compression bound " << cu.upper
              << " want " << c.expect << ";";
        }
    }

    auto catalog = small_graph_catalog(6);
    int edged = 0;
    int violations = 0;
    for (const auto& g : catalog) {
        bool has_edge = false;
        for (int v = 0; v < g.m && !has_edge; ++v)
            has_edge = g.adj[v].any();
        if (!has_edge) continue;
        ++edged;
        int chi = chromatic_number(g).chi;
        HomK2 hom = hom_k2(g);
        CompressionResult cu = xind_upper(hom.poset);
        if (chi >= cu.upper + 2) continue;
        bool complete = false;
        std::uint64_t nodes = 0;
        if (ladder_feasible(hom.poset, chi - 2, 200000000ull, complete, nodes,
                            nullptr))
            continue;
        ++violations;
        if (violations == 1)
            d << " first violation on a " << g.m << "-vertex graph (chi=" << chi
              << ", bound " << cu.upper << ", feasibility "
              << (complete ? "refuted" : "out of budget") << ");";
    }
    if (catalog.size() != 208) {
        ok = false;
        d << " catalog has " << catalog.size() << " graphs, expected 208;";
    }
    if (violations > 0) ok = false;
    if (ok)
        d << "Xind = 0/1/2 exact, compression tight, chi >= Xind + 2 on all "
          << edged << " catalog graphs with an edge";
    r.pass = ok;
    r.detail = d.str();
    return r;
}

// 8. Colorful complete bipartite subgraphs on C5 and Petersen: constructive
// extraction and brute-force search agree on every canonical optimal
// coloring and every bipartition of the colors.
CriterionResult criterion_colorful_klm() {
    CriterionResult r{8, "colorful-klm", false, "", 0.0, 0.0};
    struct Case { const char* name; Graph g; long expect_colorings; };
    std::array<Case, 2> cases{{
        {"C5", cycle_graph(5), 5},
        {"Petersen", kneser_graph(complete_uniform(5, 2)), 20},
    }};
    std::ostringstream d;
    bool ok = true;
    for (auto& c : cases) {
        HomK2 hom = hom_k2(c.g);
        VerifyReport rep = verify_for_all_colorings(c.g, 3, [&](const Coloring& col) {
            for (int mask = 1; mask < 7; ++mask) {
                std::vector<int> I, J;
                for (int color = 1; color <= 3; ++color)
                    (mask >> (color - 1) & 1 ? I : J).push_back(color);
                ColorfulKlm built;
                try {
                    built = colorful_klm_extract(c.g, col, I, J, hom);
                } catch (const std::exception&) {
                    return false;
                }
                if (!colorful_klm_valid(c.g, col, I, J, built)) return false;
                auto found = find_colorful_klm(c.g, col, I, J);
                if (!found || !colorful_klm_valid(c.g, col, I, J, *found))
                    return false;
            }
            return true;
        });
        if (rep.total != c.expect_colorings || rep.failures != 0) {
            ok = false;
            d << " " << c.name << ": " << (rep.total - rep.failures) << "/"
              << rep.total << " colorings (expected " << c.expect_colorings
              << ", zero failures);";
        }
    }
    if (ok) d << "6 bipartitions x (5 + 20) colorings, extractor and searcher agree";
    r.pass = ok;
    r.detail = d.str();
    return r;
}

// 9. Every canonical optimal 3-coloring of Petersen admits a valid path of
// complete bipartite subgraphs.
CriterionResult criterion_path_walk() {
    CriterionResult r{9, "path-walk", false, "", 0.0, 120.0}; // total
    Graph pet = kneser_graph(complete_uniform(5, 2));
    auto t0 = Clock::now();
    VerifyReport rep = verify_for_all_colorings(pet, 3, [&](const Coloring& c) {
        auto w = find_path_of_subgraphs(pet, c, 3);
        return w && path_witness_valid(pet, c, *w);
    });
    double sec = elapsed(t0);
    bool ok = rep.total == 20 && rep.failures == 0 && sec < r.limit_seconds;
    std::ostringstream d;
    d << (rep.total - rep.failures) << "/" << rep.total
      << " colorings admit a path witness";
    if (rep.total != 20) d << " (expected 20)";
    if (sec >= r.limit_seconds) d << " (over the total time limit)";
    r.pass = ok;
    r.detail = d.str();
    return r;
}

// 10. chi = cd2 = n + m - 2k + 2 on the three pinned mixed families.
CriterionResult criterion_family_values() {
    CriterionResult r{10, "family-values", false, "", 0.0, 0.0};
    struct Case { int n, m, k; };
    const std::array<Case, 3> cases{{{3, 1, 2}, {4, 2, 2}, {5, 1, 2}}};
    std::ostringstream d;
    bool ok = true;
    for (const auto& c : cases) {
        int expect = c.n + c.m - 2 * c.k + 2;
        Hypergraph h = f_nmk(c.n, c.m, c.k);
        int chi = chromatic_number(kneser_graph(h)).chi;
        int defect = cd2(h).value;
        if (chi != expect || defect != expect) {
            ok = false;
            d << " F(" << c.n << "," << c.m << "," << c.k << "): chi=" << chi
              << " cd2=" << defect << " want " << expect << ";";
        }
    }
    if (ok) d << "chi = cd2 = {2,4,4} on (3,1,2),(4,2,2),(5,1,2)";
    r.pass = ok;
    r.detail = d.str();
    return r;
}

// 11. Exhaustive niceness checks on three complete uniform families and
// three partition matroid families.
CriterionResult criterion_niceness() {
    CriterionResult r{11, "niceness", false, "", 0.0, 300.0}; // total
    std::vector<std::pair<std::string, Hypergraph>> cases;
    cases.emplace_back("KU(5,2)", complete_uniform(5, 2));
    cases.emplace_back("KU(6,2)", complete_uniform(6, 2));
    cases.emplace_back("KU(7,3)", complete_uniform(7, 3));
    cases.emplace_back("PM(3+3,caps 1,1)", partition_matroid({3, 3}, {1, 1}, 2).first);
    cases.emplace_back("PM(5,cap 2)", partition_matroid({5}, {2}, 2).first);
    cases.emplace_back("PM(4+3,caps 1,1)", partition_matroid({4, 3}, {1, 1}, 2).first);
    auto t0 = Clock::now();
    std::ostringstream d;
    bool ok = true;
    for (auto& [name, h] : cases) {
        int chi = chromatic_number(kneser_graph(h)).chi;
        NicenessResult res = check_nice(h, chi);
        if (!res.nice) {
            ok = false;
            d << " " << name << " not nice;";
        }
    }
    double sec = elapsed(t0);
    if (sec >= r.limit_seconds) {
        ok = false;
        d << " over the total time limit;";
    }
    if (ok) d << "all six families nice by exhaustive check";
    r.pass = ok;
    r.detail = d.str();
    return r;
}

bool triangles_disjoint(const TriStarPartition& p) {
    std::uint64_t used = 0;
    for (const auto& t : p.triangles) {
        std::uint64_t m = (std::uint64_t(1) << t[0]) | (std::uint64_t(1) << t[1])
                          | (std::uint64_t(1) << t[2]);
        if (m & used) return false;
        used |= m;
    }
    return true;
}

// 12. Random graphs whose Kneser chromatic number equals the defect always
// admit an optimal triangle/star partition with at least one triangle, all
// triangles vertex-disjoint.
CriterionResult criterion_tristar_random(std::uint64_t seed) {
    CriterionResult r{12, "tristar-random", false, "", 0.0, 0.0};
    Rng rng = criterion_rng(seed, 12);
    int filtered = 0;
    int failures = 0;
    std::string why;
    for (int i = 0; i < 500; ++i) {
        int m = 3 + i % 5;
        Graph g = random_graph(m, 0.5, rng);
        Hypergraph h = edge_hypergraph(g);
        int chi = chromatic_number(kneser_graph(h)).chi;
        if (chi != cd2(h).value) continue;
        ++filtered;
        TriStarResult res = triangle_star_partitions(g);
        bool good = res.disjoint_optimum && !res.disjoint_witness.triangles.empty()
                    && res.disjoint_witness.parts() == res.parts
                    && partition_valid(g, res.disjoint_witness)
                    && triangles_disjoint(res.disjoint_witness);
        if (!good) {
            ++failures;
            if (why.empty()) why = "graph " + std::to_string(i + 1);
        }
    }
    bool ok = filtered > 0 && failures == 0;
    std::ostringstream d;
    d << filtered << "/500 graphs pass the filter, " << failures
      << " without a disjoint triangle optimum";
    if (!why.empty()) d << " (first: " << why << ")";
    r.pass = ok;
    r.detail = d.str();
    return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
    std::vector<std::function<CriterionResult()>> bodies{
        [] { return criterion_kneser_values(); },
        [] { return criterion_ktt_exhaustive(); },
        [&] { return criterion_product_sampled(opt.seed); },
        [&] { return criterion_fan_oddness(opt.seed); },
        [&] { return criterion_chain_pairs(opt.seed); },
        [] { return criterion_circular_values(); },
        [] { return criterion_cross_index(); },
        [] { return criterion_colorful_klm(); },
        [] { return criterion_path_walk(); },
        [] { return criterion_family_values(); },
        [] { return criterion_niceness(); },
        [&] { return criterion_tristar_random(opt.seed); },
    };
    std::vector<CriterionResult> out;
    out.reserve(bodies.size());
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        auto t0 = Clock::now();
        CriterionResult res;
        try {
            res = bodies[i]();
        } catch (const std::exception& e) {
            res.index = int(i) + 1;
            res.name = "criterion-" + std::to_string(i + 1);
            res.pass = false;
            res.detail = std::string("unexpected exception: ") + e.what();
        }
        res.seconds = elapsed(t0);
        out.push_back(std::move(res));
    }
    return out;
}

bool print_acceptance(std::ostream& out, const AcceptanceOptions& opt) {
    auto results = run_acceptance(opt);
    int passed = 0;
    for (const auto& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.index
            << "  " << std::left << std::setw(17) << r.name << std::right
            << std::fixed << std::setprecision(1) << std::setw(7) << r.seconds
            << "s  " << r.detail << "\n";
        if (r.pass) ++passed;
    }
    out << (passed == int(results.size()) ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL")
        << ": " << passed << "/" << results.size() << " criteria passed (seed "
        << opt.seed << ")\n";
    return passed == int(results.size());
}

} // namespace kneser
