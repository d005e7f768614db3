// kneserlab: command-line front end over the core library. Subcommands read
// JSON lines from stdin and write JSON lines (objects or certificates) to
// stdout; human-readable summaries go to stderr so pipelines stay clean.
// Exit codes: 0 ok, 1 falsified instance or failed check, 2 invalid input,
// 3 cap overflow.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kneser/acceptance.hpp"
#include "kneser/alternation.hpp"
#include "kneser/certificates.hpp"
#include "kneser/chen.hpp"
#include "kneser/chromatic.hpp"
#include "kneser/circuit.hpp"
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
#include "kneser/tristar.hpp"
#include "kneser/two_coloring.hpp"
#include "kneser/witness_search.hpp"
#include "kneser/witnesses.hpp"
#include "kneser/xind.hpp"

namespace {

using nlohmann::json;
using namespace kneser;

long env_long(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || parsed < 1)
        throw InvalidInput(std::string(name) + " must be a positive integer");
    return parsed;
}

// Feeds every nonempty stdin line to the handler; used by all streaming
// subcommands.
void for_each_line(const std::function<void(const std::string&)>& f) {
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        f(line);
    }
}

json parse_line(const std::string& line) {
    try {
        return json::parse(line);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad JSON line: ") + e.what());
    }
}

Graph graph_from_line(const std::string& line) {
    return Graph::from_json_string(line);
}

Hypergraph hypergraph_from_line(const std::string& line) {
    return Hypergraph::from_json_string(line);
}

json graph_json(const Graph& g) { return json::parse(g.to_json_string()); }

json coloring_json(const Coloring& c) {
    return json::parse(c.to_json_string());
}

// Instance lines for the witness subcommands: {"graph": ..., "coloring": ...}.
std::pair<Graph, Coloring> instance_from_line(const std::string& line) {
    json j = parse_line(line);
    if (!j.is_object() || !j.contains("graph") || !j.contains("coloring"))
        throw InvalidInput("expected an object with \"graph\" and \"coloring\"");
    Graph g = Graph::from_json_string(j["graph"].dump());
    Coloring c = Coloring::from_json_string(j["coloring"].dump());
    if (int(c.color.size()) != g.m)
        throw InvalidInput("the coloring does not match the graph size");
    if (!c.proper_on(g)) throw InvalidInput("the coloring is not proper");
    return {std::move(g), std::move(c)};
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

void emit_certificate(const std::string& invariant, const json& params,
                      const json& value, const json& witness,
                      std::uint64_t seed) {
    std::cout << make_certificate(invariant, params.dump(), value.dump(),
                                  witness.dump(), seed)
              << "\n";
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InvalidInput(std::string(what) +
                               ": expected comma-separated integers");
        }
    }
    if (out.empty())
        throw InvalidInput(std::string(what) + ": empty list");
    return out;
}

json tristar_witness_json(const TriStarPartition& p) {
    json triangles = json::array();
    for (const auto& t : p.triangles)
        triangles.push_back({t[0] + 1, t[1] + 1, t[2] + 1});
    json stars = json::array();
    for (const auto& [center, edges] : p.stars) {
        json je = json::array();
        for (const auto& [u, v] : edges) je.push_back({u + 1, v + 1});
        stars.push_back(json{{"center", center + 1}, {"edges", je}});
    }
    return json{{"triangles", triangles}, {"stars", stars}};
}

json sigma_json(const std::vector<int>& sigma) {
    json out = json::array();
    for (int v : sigma) out.push_back(v + 1);
    return out;
}

struct GenOptions {
    std::string family;
    int n = 0, m = 0, k = 0, changes = 0, count = 1;
    double p = 0.5;
    std::string parts, caps;
};

int run_gen(const GenOptions& o, std::uint64_t seed) {
    Rng rng = make_rng(seed);
    for (int i = 0; i < o.count; ++i) {
        if (o.family == "complete-uniform") {
            emit(json::parse(complete_uniform(o.n, o.k).to_json_string()));
        } else if (o.family == "f-nmk") {
            emit(json::parse(f_nmk(o.n, o.m, o.k).to_json_string()));
        } else if (o.family == "partition-matroid") {
            auto [h, two] = partition_matroid(parse_int_list(o.parts, "--parts"),
                                              parse_int_list(o.caps, "--caps"),
                                              o.k);
            if (!two)
                std::cerr << "gen: note: the family has no two disjoint edges\n";
            emit(json::parse(h.to_json_string()));
        } else if (o.family == "cycle" || o.family == "complete") {
            if (o.m < (o.family == "cycle" ? 3 : 1))
                throw InvalidInput("gen: --m too small for the family");
            Graph g(o.m);
            if (o.family == "cycle")
                for (int v = 0; v < o.m; ++v) g.add_edge(v, (v + 1) % o.m);
            else
                for (int u = 0; u < o.m; ++u)
                    for (int v = u + 1; v < o.m; ++v) g.add_edge(u, v);
            emit(graph_json(g));
        } else if (o.family == "random-graph") {
            if (o.m < 2) throw InvalidInput("gen: --m must be at least 2");
            Graph g = random_graph(o.m, o.p, rng);
            json j = graph_json(g);
            j["seed"] = seed;
            emit(j);
        } else if (o.family == "first-sign") {
            emit(json::parse(to_json_string(first_sign_labeling(o.n))));
        } else if (o.family == "random-labeling") {
            int m = o.m > 0 ? o.m : o.n;
            int changes = o.changes > 0 ? o.changes : 4 * o.n;
            FanLabeling l = random_valid_labeling(o.n, m, changes, rng);
            json j = json::parse(to_json_string(l));
            j["seed"] = seed;
            emit(j);
        } else {
            throw InvalidInput("gen: unknown family \"" + o.family + "\"");
        }
    }
    return 0;
}

int run_kneser() {
    for_each_line([&](const std::string& line) {
        Hypergraph h = hypergraph_from_line(line);
        Graph g = kneser_graph(h);
        emit(graph_json(g));
        std::cerr << "kneser: " << g.m << " vertices, " << g.edge_count()
                  << " edges\n";
    });
    return 0;
}

int run_product() {
    std::vector<Graph> factors;
    for_each_line([&](const std::string& line) {
        factors.push_back(graph_from_line(line));
    });
    if (factors.empty()) throw InvalidInput("product: no input graphs");
    Graph g = categorical_product(factors);
    emit(graph_json(g));
    std::cerr << "product: " << factors.size() << " factors, " << g.m
              << " vertices\n";
    return 0;
}

int run_chi(std::uint64_t seed) {
    for_each_line([&](const std::string& line) {
        Graph g = graph_from_line(line);
        ChromaticResult r = chromatic_number(g);
        emit_certificate("chi", json{{"graph", graph_json(g)}}, json(r.chi),
                         json{{"coloring", coloring_json(r.witness)}}, seed);
        std::cerr << "chi: " << r.chi << " (" << g.m << " vertices)\n";
    });
    return 0;
}

int run_chic(std::uint64_t seed) {
    for_each_line([&](const std::string& line) {
        Graph g = graph_from_line(line);
        CircularResult r = circular_chromatic_number(g);
        emit_certificate("chic", json{{"graph", graph_json(g)}},
                         json{{"p", r.value.p}, {"q", r.value.q}},
                         json{{"residues", r.witness.color}}, seed);
        std::cerr << "chic: " << r.value.str() << "\n";
    });
    return 0;
}

int run_cd2(std::uint64_t seed) {
    for_each_line([&](const std::string& line) {
        Hypergraph h = hypergraph_from_line(line);
        DefectWitness w = cd2(h);
        json removed = json::array(), side = json::array();
        for (int v = 0; v < h.n; ++v) {
            if (w.removed >> v & 1) removed.push_back(v + 1);
            if (w.first_side >> v & 1) side.push_back(v + 1);
        }
        emit_certificate("cd2", json{{"hypergraph", json::parse(h.to_json_string())}},
                         json(w.value),
                         json{{"removed", removed}, {"first_side", side}}, seed);
        std::cerr << "cd2: " << w.value << "\n";
    });
    return 0;
}

int run_alt(int samples, std::uint64_t seed) {
    for_each_line([&](const std::string& line) {
        Hypergraph h = hypergraph_from_line(line);
        AltMinResult r;
        if (h.n <= 8) {
            r = alt_min_exact(h);
        } else {
            Rng rng = make_rng(seed);
            r = alt_min_heuristic(h, samples, rng);
        }
        emit_certificate("alt", json{{"hypergraph", json::parse(h.to_json_string())}},
                         json(r.value),
                         json{{"sigma", sigma_json(r.sigma)}, {"exact", r.exact}},
                         seed);
        std::cerr << "alt: " << r.value << (r.exact ? "" : " (upper bound)")
                  << "\n";
    });
    return 0;
}

int run_nice(std::uint64_t seed) {
    int rc = 0;
    for_each_line([&](const std::string& line) {
        Hypergraph h = hypergraph_from_line(line);
        int chi = chromatic_number(kneser_graph(h)).chi;
        NicenessResult r = check_nice(h, chi);
        json params{{"hypergraph", json::parse(h.to_json_string())},
                    {"chi", chi}};
        emit_certificate("nice", params, json(r.nice),
                         r.nice ? json{{"sigma", sigma_json(r.sigma)}}
                                : json(nullptr),
                         seed);
        std::cerr << "nice: " << (r.nice ? "yes" : "no") << " (chi " << chi
                  << ")\n";
    });
    return rc;
}

int run_xind(std::uint64_t budget, std::uint64_t seed) {
    for_each_line([&](const std::string& line) {
        Graph g = graph_from_line(line);
        HomK2 hom = hom_k2(g);
        XindResult r = xind_exact(hom.poset, budget);
        emit_certificate("xind", json{{"graph", graph_json(g)}},
                         json{{"lower", r.lower},
                              {"upper", r.upper},
                              {"exact", r.exact}},
                         json{{"labels", r.witness.label}}, seed);
        std::cerr << "xind: [" << r.lower << ", " << r.upper << "]"
                  << (r.exact ? "" : " (budget exhausted)") << ", poset size "
                  << hom.poset.size << "\n";
    });
    return 0;
}

int run_fan_count(std::uint64_t seed) {
    int rc = 0;
    for_each_line([&](const std::string& line) {
        FanLabeling l = fan_labeling_from_json(line);
        LabelingCheck lc = validate_labeling(l);
        if (!lc.ok) throw InvalidInput("fan-count: " + lc.reason);
        std::uint64_t count = count_negative_alternating_chains(l);
        bool odd = count % 2 == 1;
        emit_certificate("fan-count", json{{"labeling", parse_line(line)}},
                         json{{"count", count}, {"odd", odd}}, json(nullptr),
                         seed);
        std::cerr << "fan-count: " << count << (odd ? " (odd)" : " (EVEN)")
                  << "\n";
        if (!odd) rc = 1;
    });
    return rc;
}

int run_chen(int gamma, std::uint64_t seed) {
    for_each_line([&](const std::string& line) {
        FanLabeling l = fan_labeling_from_json(line);
        ChainPair cp = chen_chain_pair(l, gamma);
        json params{{"labeling", parse_line(line)}, {"gamma", gamma}};
        emit_certificate("chen", params, json(nullptr),
                         json::parse(to_json_string(cp, l.n)), seed);
        std::cerr << "chen: chains through position " << gamma << " found\n";
    });
    return 0;
}

int run_circuit(std::uint64_t seed) {
    for_each_line([&](const std::string& line) {
        FanLabeling l = fan_labeling_from_json(line);
        FanCircuit c = fan_symmetric_circuit(l);
        json chains = json::array();
        for (const auto& chain : c.chains) {
            json jc = json::array();
            for (std::size_t code : chain)
                jc.push_back(sv_decode(code, l.n).str());
            chains.push_back(jc);
        }
        emit_certificate("circuit", json{{"labeling", parse_line(line)}},
                         json{{"alternating", c.alternating_count}},
                         json{{"chains", chains}}, seed);
        std::cerr << "circuit: " << c.chains.size() << " chains, "
                  << c.alternating_count << " alternating\n";
    });
    return 0;
}

int run_zigzag(int t_flag, std::uint64_t seed) {
    int rc = 0;
    for_each_line([&](const std::string& line) {
        auto [g, c] = instance_from_line(line);
        int t = t_flag > 0 ? t_flag : c.t;
        auto w = find_zigzag(g, c, t);
        if (!w) {
            std::cerr << "zigzag: no witness at t = " << t << "\n";
            rc = 1;
            return;
        }
        json params{{"graph", graph_json(g)},
                    {"coloring", coloring_json(c)},
                    {"t", t}};
        emit_certificate("zigzag", params, json(nullptr),
                         json::parse(to_json_string(*w)), seed);
        std::cerr << "zigzag: witness with " << w->a.size() << "+"
                  << w->b.size() << " vertices\n";
    });
    return rc;
}

int run_klm(const std::string& i_flag, const std::string& j_flag,
            std::uint64_t seed) {
    std::vector<int> I = parse_int_list(i_flag, "--i");
    std::vector<int> J = parse_int_list(j_flag, "--j");
    int rc = 0;
    for_each_line([&](const std::string& line) {
        auto [g, c] = instance_from_line(line);
        auto w = find_colorful_klm(g, c, I, J);
        if (!w) {
            std::cerr << "klm: no witness\n";
            rc = 1;
            return;
        }
        json params{{"graph", graph_json(g)},
                    {"coloring", coloring_json(c)},
                    {"i", I},
                    {"j", J}};
        emit_certificate("klm", params, json(nullptr),
                         json::parse(to_json_string(*w)), seed);
        std::cerr << "klm: witness with " << w->a.size() << "+" << w->b.size()
                  << " vertices\n";
    });
    return rc;
}

int run_ktt(int t_flag, bool extract, std::uint64_t seed) {
    int rc = 0;
    for_each_line([&](const std::string& line) {
        Graph g;
        Coloring c;
        std::optional<KttStarWitness> w;
        int t = 0;
        if (extract) {
            json j = parse_line(line);
            if (!j.is_object() || !j.contains("factors"))
                throw InvalidInput("ktt --extract: expected {\"factors\": [...]}");
            std::vector<Hypergraph> hs;
            for (const auto& jf : j["factors"])
                hs.push_back(Hypergraph::from_json_string(jf.dump()));
            std::optional<Coloring> col;
            if (j.contains("coloring") && !j["coloring"].is_null())
                col = Coloring::from_json_string(j["coloring"].dump());
            auto ctx = ProductLabelingContext::build(std::move(hs), col);
            g = ctx.product;
            c = ctx.coloring;
            t = ctx.t;
            w = extract_ktt_star(ctx);
        } else {
            std::tie(g, c) = instance_from_line(line);
            t = t_flag > 0 ? t_flag : c.t;
            w = find_ktt_star(g, c, t);
        }
        if (!w) {
            std::cerr << "ktt: no witness at t = " << t << "\n";
            rc = 1;
            return;
        }
        json params{{"graph", graph_json(g)},
                    {"coloring", coloring_json(c)},
                    {"t", t}};
        emit_certificate("ktt", params, json(nullptr),
                         json::parse(to_json_string(*w)), seed);
        std::cerr << "ktt: witness with " << 2 * w->t << " vertices\n";
    });
    return rc;
}

int run_path(int t_flag, long cap, std::uint64_t seed) {
    int rc = 0;
    for_each_line([&](const std::string& line) {
        auto [g, c] = instance_from_line(line);
        int t = t_flag > 0 ? t_flag : c.t;
        auto w = find_path_of_subgraphs(g, c, t, cap);
        if (!w) {
            std::cerr << "path: no witness at t = " << t << "\n";
            rc = 1;
            return;
        }
        json params{{"graph", graph_json(g)},
                    {"coloring", coloring_json(c)},
                    {"t", t}};
        emit_certificate("path", params, json(nullptr),
                         json::parse(to_json_string(*w)), seed);
        std::cerr << "path: " << w->states.size() << " states\n";
    });
    return rc;
}

int run_tristar(std::uint64_t seed) {
    for_each_line([&](const std::string& line) {
        Graph g = graph_from_line(line);
        TriStarResult r = triangle_star_partitions(g);
        emit_certificate("tristar", json{{"graph", graph_json(g)}},
                         json{{"parts", r.parts},
                              {"disjoint_optimum", r.disjoint_optimum}},
                         tristar_witness_json(r.witness), seed);
        std::cerr << "tristar: " << r.parts << " parts, triangles in ["
                  << r.min_triangles << ", " << r.max_triangles << "]"
                  << (r.disjoint_optimum ? ", disjoint optimum" : "") << "\n";
    });
    return 0;
}

int run_verify(const std::string& what, int t_flag, long samples,
               const std::string& i_flag, const std::string& j_flag,
               long path_cap, std::uint64_t seed) {
    int rc = 0;
    for_each_line([&](const std::string& line) {
        Graph g = graph_from_line(line);
        int t = t_flag > 0 ? t_flag : chromatic_number(g).chi;

        std::function<bool(const Coloring&)> pred;
        json extra;
        if (what == "ktt") {
            pred = [&](const Coloring& c) {
                auto w = find_ktt_star(g, c, t);
                return w && ktt_star_valid(g, c, *w);
            };
        } else if (what == "zigzag") {
            pred = [&](const Coloring& c) {
                auto w = find_zigzag(g, c, t);
                return w && zigzag_valid(g, c, t, *w);
            };
        } else if (what == "path") {
            pred = [&](const Coloring& c) {
                auto w = find_path_of_subgraphs(g, c, t, path_cap);
                return w && path_witness_valid(g, c, *w);
            };
        } else if (what == "klm") {
            if (!i_flag.empty() != !j_flag.empty())
                throw InvalidInput("verify: --i and --j go together");
            if (!i_flag.empty()) {
                std::vector<int> I = parse_int_list(i_flag, "--i");
                std::vector<int> J = parse_int_list(j_flag, "--j");
                extra = json{{"i", I}, {"j", J}};
                pred = [&, I, J](const Coloring& c) {
                    auto w = find_colorful_klm(g, c, I, J);
                    return w && colorful_klm_valid(g, c, I, J, *w);
                };
            } else {
                extra = json{{"bipartitions", "all"}};
                pred = [&](const Coloring& c) {
                    for (int mask = 1; mask + 1 < (1 << t); ++mask) {
                        std::vector<int> I, J;
                        for (int color = 1; color <= t; ++color)
                            (mask >> (color - 1) & 1 ? I : J).push_back(color);
                        auto w = find_colorful_klm(g, c, I, J);
                        if (!w || !colorful_klm_valid(g, c, I, J, *w))
                            return false;
                    }
                    return true;
                };
            }
        } else {
            throw InvalidInput("verify: --what must be one of ktt, zigzag, "
                               "klm, path");
        }

        VerifyReport rep = samples > 0
            ? verify_sampled_colorings(g, t, samples, seed, pred)
            : verify_for_all_colorings(g, t, pred);
        json params{{"what", what}, {"t", t}, {"graph", graph_json(g)}};
        if (!extra.is_null()) params["scope"] = extra;
        emit_certificate("verify", params, json::parse(to_json_string(rep)),
                         json(nullptr), seed);
        std::cerr << "verify " << what << ": " << (rep.total - rep.failures)
                  << "/" << rep.total << (rep.sampled ? " sampled" : "")
                  << " colorings pass\n";
        if (rep.failures > 0) rc = 1;
    });
    return rc;
}

int run_check(const std::vector<std::string>& files) {
    int rc = 0;
    long checked = 0;
    auto handle = [&](const std::string& line) {
        CheckOutcome out = check_certificate(line);
        ++checked;
        emit(json{{"ok", out.ok}, {"reason", out.reason}});
        if (!out.ok) {
            std::cerr << "check: FAILED: " << out.reason << "\n";
            rc = 1;
        }
    };
    if (files.empty()) {
        for_each_line(handle);
    } else {
        for (const auto& path : files) {
            std::ifstream in(path);
            if (!in) throw InvalidInput("check: cannot open " + path);
            std::string line;
            while (std::getline(in, line)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos)
                    continue;
                handle(line);
            }
        }
    }
    std::cerr << "check: " << checked << " certificate(s), "
              << (rc == 0 ? "all valid" : "failures present") << "\n";
    if (checked == 0) throw InvalidInput("check: no certificates supplied");
    return rc;
}

int run_table(const std::string& suite, std::uint64_t seed) {
    if (suite != "acceptance")
        throw InvalidInput("table: unknown suite \"" + suite + "\"");
    AcceptanceOptions opt;
    opt.seed = seed;
    return print_acceptance(std::cout, opt) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coloring invariants of general Kneser graphs, with "
                 "replayable certificates"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    int jobs = 1;
    auto* seed_opt =
        app.add_option("--seed", seed, "seed recorded in every certificate");
    app.add_option("--jobs", jobs,
                   "worker count; results never depend on it")
        ->check(CLI::PositiveNumber);

    long default_path_cap = kDefaultPathStateCap;
    std::uint64_t default_budget = 50000000;
    try {
        default_path_cap = env_long("KNESERLAB_PATH_CAP", default_path_cap);
        default_budget = std::uint64_t(
            env_long("KNESERLAB_SEARCH_BUDGET", long(default_budget)));
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }

    std::function<int()> runner;

    GenOptions gen;
    auto* cgen = app.add_subcommand("gen", "generate hypergraph, graph, or "
                                           "labeling families as JSON lines");
    cgen->add_option("--family", gen.family,
                     "complete-uniform | f-nmk | partition-matroid | cycle | "
                     "complete | random-graph | first-sign | random-labeling")
        ->required();
    cgen->add_option("--n", gen.n, "ground-set size / labeling dimension");
    cgen->add_option("--m", gen.m, "second parameter (vertices, labels range)");
    cgen->add_option("--k", gen.k, "edge size");
    cgen->add_option("--p", gen.p, "edge probability for random-graph");
    cgen->add_option("--parts", gen.parts, "partition sizes, e.g. 3,3");
    cgen->add_option("--caps", gen.caps, "per-part caps, e.g. 1,1");
    cgen->add_option("--changes", gen.changes,
                     "mutation attempts for random-labeling");
    cgen->add_option("--count", gen.count, "number of output lines")
        ->check(CLI::PositiveNumber);
    cgen->callback([&] { runner = [&] { return run_gen(gen, seed); }; });

    auto* ckneser = app.add_subcommand(
        "kneser", "hypergraph lines -> general Kneser graph lines");
    ckneser->callback([&] { runner = [&] { return run_kneser(); }; });

    auto* cproduct = app.add_subcommand(
        "product", "graph lines -> their categorical product");
    cproduct->callback([&] { runner = [&] { return run_product(); }; });

    auto* cchi = app.add_subcommand("chi", "chromatic number certificates");
    cchi->callback([&] { runner = [&] { return run_chi(seed); }; });

    auto* cchic =
        app.add_subcommand("chic", "circular chromatic number certificates");
    cchic->callback([&] { runner = [&] { return run_chic(seed); }; });

    auto* ccd2 =
        app.add_subcommand("cd2", "2-colorability defect certificates");
    ccd2->callback([&] { runner = [&] { return run_cd2(seed); }; });

    int alt_samples = 200;
    auto* calt = app.add_subcommand("alt", "alternation number certificates "
                                           "(exact for n <= 8)");
    calt->add_option("--samples", alt_samples,
                     "random permutations for the heuristic upper bound");
    calt->callback([&] { runner = [&] { return run_alt(alt_samples, seed); }; });

    auto* cnice = app.add_subcommand("nice", "niceness certificates");
    cnice->callback([&] { runner = [&] { return run_nice(seed); }; });

    std::uint64_t xind_budget = default_budget;
    auto* cxind = app.add_subcommand(
        "xind", "cross-index of Hom(K2, g) certificates");
    cxind->add_option("--budget", xind_budget, "search node budget");
    cxind->callback(
        [&] { runner = [&] { return run_xind(xind_budget, seed); }; });

    auto* cfan = app.add_subcommand(
        "fan-count", "negative-alternating chain count certificates");
    cfan->callback([&] { runner = [&] { return run_fan_count(seed); }; });

    int chen_gamma = 0;
    auto* cchen = app.add_subcommand(
        "chen", "chain-pair certificates for order-preserving labelings");
    cchen->add_option("--gamma", chen_gamma, "distinguished position")
        ->required()
        ->check(CLI::PositiveNumber);
    cchen->callback(
        [&] { runner = [&] { return run_chen(chen_gamma, seed); }; });

    auto* ccircuit = app.add_subcommand(
        "circuit", "negation-symmetric circuit certificates");
    ccircuit->callback([&] { runner = [&] { return run_circuit(seed); }; });

    int zz_t = 0;
    auto* czigzag = app.add_subcommand(
        "zigzag", "zig-zag witness on {\"graph\",\"coloring\"} lines");
    czigzag->add_option("--t", zz_t, "colors to collect (default coloring.t)");
    czigzag->callback([&] { runner = [&] { return run_zigzag(zz_t, seed); }; });

    std::string klm_i, klm_j;
    auto* cklm = app.add_subcommand(
        "klm", "colorful complete bipartite witness for a color bipartition");
    cklm->add_option("--i", klm_i, "colors on side a, e.g. 1")->required();
    cklm->add_option("--j", klm_j, "colors on side b, e.g. 2,3")->required();
    cklm->callback(
        [&] { runner = [&] { return run_klm(klm_i, klm_j, seed); }; });

    int ktt_t = 0;
    bool ktt_extract = false;
    auto* cktt = app.add_subcommand(
        "ktt", "crossed colorful K_{t,t} witness (search, or labeling-based "
               "extraction with --extract)");
    cktt->add_option("--t", ktt_t, "colors (default coloring.t)");
    cktt->add_flag("--extract", ktt_extract,
                   "read {\"factors\": [hypergraphs], \"coloring\"?} lines and "
                   "run the constructive extraction");
    cktt->callback(
        [&] { runner = [&] { return run_ktt(ktt_t, ktt_extract, seed); }; });

    int path_t = 0;
    long path_cap = default_path_cap;
    auto* cpath = app.add_subcommand(
        "path", "path of complete bipartite subgraphs witness");
    cpath->add_option("--t", path_t, "colors (default coloring.t)");
    cpath->add_option("--cap", path_cap, "BFS state cap");
    cpath->callback(
        [&] { runner = [&] { return run_path(path_t, path_cap, seed); }; });

    auto* ctristar =
        app.add_subcommand("tristar", "triangle/star partition certificates");
    ctristar->callback([&] { runner = [&] { return run_tristar(seed); }; });

    std::string verify_what;
    int verify_t = 0;
    long verify_samples = 0;
    std::string verify_i, verify_j;
    long verify_path_cap = default_path_cap;
    auto* cverify = app.add_subcommand(
        "verify", "run a witness search over every canonical optimal coloring "
                  "(or --sample N random ones) of each input graph");
    cverify->add_option("--what", verify_what, "ktt | zigzag | klm | path")
        ->required();
    cverify->add_option("--t", verify_t, "colors (default chi)");
    cverify->add_option("--sample", verify_samples,
                        "sampled mode with this many colorings");
    cverify->add_option("--i", verify_i, "klm: colors on side a");
    cverify->add_option("--j", verify_j, "klm: colors on side b");
    cverify->add_option("--cap", verify_path_cap, "path BFS state cap");
    cverify->callback([&] {
        runner = [&] {
            return run_verify(verify_what, verify_t, verify_samples, verify_i,
                              verify_j, verify_path_cap, seed);
        };
    });

    std::vector<std::string> check_files;
    auto* ccheck = app.add_subcommand(
        "check", "re-validate certificates from files or stdin");
    ccheck->add_option("files", check_files, "certificate files (JSON lines)");
    ccheck->callback([&] { runner = [&] { return run_check(check_files); }; });

    std::string table_suite = "acceptance";
    auto* ctable = app.add_subcommand("table", "run a verification suite and "
                                               "print its result table");
    ctable->add_option("--suite", table_suite, "suite name");
    ctable->callback([&] {
        runner = [&] {
            return run_table(table_suite, seed_opt->count() ? seed : 7);
        };
    });

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        return runner();
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ClaimFailure& e) {
        std::cerr << "claim failed: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
