#include <kneser/certificates.hpp>

#include <algorithm>
#include <bit>
#include <optional>
#include <vector>

#include <json.hpp>

#include <kneser/alternation.hpp>
#include <kneser/chen.hpp>
#include <kneser/chromatic.hpp>
#include <kneser/circuit.hpp>
#include <kneser/circular.hpp>
#include <kneser/errors.hpp>
#include <kneser/families.hpp>
#include <kneser/fan.hpp>
#include <kneser/hom.hpp>
#include <kneser/tristar.hpp>
#include <kneser/two_coloring.hpp>
#include <kneser/witness_search.hpp>
#include <kneser/witnesses.hpp>
#include <kneser/xind.hpp>

namespace kneser {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string(what) + ": bad JSON: " + e.what());
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(std::string("certificate: missing field \"") + key +
                           "\"");
    return j[key];
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer())
        throw InvalidInput(std::string("certificate: field \"") + key +
                           "\" must be an integer");
    return v.get<int>();
}

Graph graph_param(const json& params) {
    return Graph::from_json_string(field(params, "graph").dump());
}

Hypergraph hypergraph_param(const json& params) {
    return Hypergraph::from_json_string(field(params, "hypergraph").dump());
}

Coloring coloring_param(const json& params) {
    return Coloring::from_json_string(field(params, "coloring").dump());
}

FanLabeling labeling_param(const json& params) {
    return fan_labeling_from_json(field(params, "labeling").dump());
}

// Permutations and vertex lists travel 1-based, like everything else.
std::vector<int> vertex_list(const json& j, const char* what) {
    if (!j.is_array())
        throw InvalidInput(std::string(what) + ": expected an array");
    std::vector<int> out;
    for (const auto& jv : j) {
        if (!jv.is_number_integer() || jv.get<int>() < 1)
            throw InvalidInput(std::string(what) +
                               ": entries must be positive integers");
        out.push_back(jv.get<int>() - 1);
    }
    return out;
}

bool is_permutation(const std::vector<int>& sigma, int n) {
    if (int(sigma.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

CheckOutcome fail(std::string reason) { return {false, std::move(reason)}; }

CheckOutcome pass() { return {true, ""}; }

CheckOutcome check_chi(const json& params, const json& value,
                       const json& witness) {
    Graph g = graph_param(params);
    if (!value.is_number_integer()) return fail("chi: value must be an integer");
    int claimed = value.get<int>();
    Coloring c = Coloring::from_json_string(field(witness, "coloring").dump());
    if (c.t != claimed)
        return fail("chi: the witness coloring does not use the claimed "
                    "number of colors");
    if (!c.proper_on(g)) return fail("chi: the witness coloring is not proper");
    if (!c.surjective())
        return fail("chi: the witness coloring misses a color");
    if (chromatic_number(g).chi != claimed)
        return fail("chi: recomputation disagrees with the claimed value");
    return pass();
}

CheckOutcome check_chic(const json& params, const json& value,
                        const json& witness) {
    Graph g = graph_param(params);
    long long p = int_field(value, "p"), q = int_field(value, "q");
    if (p < 1 || q < 1) return fail("chic: p and q must be positive");
    const json& jr = field(witness, "residues");
    if (!jr.is_array() || int(jr.size()) != g.m)
        return fail("chic: witness must list one residue per vertex");
    std::vector<long long> res;
    for (const auto& jv : jr) {
        if (!jv.is_number_integer()) return fail("chic: bad residue");
        long long r = jv.get<long long>();
        if (r < 0 || r >= p) return fail("chic: residue out of range");
        res.push_back(r);
    }
    for (int u = 0; u < g.m; ++u) {
        bool ok = true;
        g.adj[u].for_each([&](int v) {
            long long d = std::abs(res[u] - res[v]);
            d = std::min(d, p - d);
            if (d < q) ok = false;
        });
        if (!ok)
            return fail("chic: two adjacent vertices are circularly closer "
                        "than q");
    }
    Rational claimed = Rational::reduced(p, q);
    if (!(circular_chromatic_number(g).value == claimed))
        return fail("chic: recomputation disagrees with the claimed value");
    return pass();
}

CheckOutcome check_cd2(const json& params, const json& value,
                       const json& witness) {
    Hypergraph h = hypergraph_param(params);
    if (!value.is_number_integer()) return fail("cd2: value must be an integer");
    int claimed = value.get<int>();
    std::vector<int> removed = vertex_list(field(witness, "removed"), "cd2");
    std::vector<int> side = vertex_list(field(witness, "first_side"), "cd2");
    if (int(removed.size()) != claimed)
        return fail("cd2: the removal set does not have the claimed size");
    std::uint64_t rm = 0, fs = 0;
    for (int v : removed) {
        if (v >= h.n) return fail("cd2: removed vertex out of range");
        rm |= std::uint64_t(1) << v;
    }
    for (int v : side) {
        if (v >= h.n) return fail("cd2: side vertex out of range");
        fs |= std::uint64_t(1) << v;
    }
    for (std::uint64_t e : h.edges) {
        if (e & rm) continue;
        if ((e & fs) == e || (e & fs) == 0)
            return fail("cd2: a surviving edge is monochromatic under the "
                        "witness 2-coloring");
    }
    if (cd2(h).value != claimed)
        return fail("cd2: recomputation disagrees with the claimed value");
    return pass();
}

CheckOutcome check_alt(const json& params, const json& value,
                       const json& witness) {
    Hypergraph h = hypergraph_param(params);
    if (!value.is_number_integer()) return fail("alt: value must be an integer");
    int claimed = value.get<int>();
    std::vector<int> sigma = vertex_list(field(witness, "sigma"), "alt");
    if (!is_permutation(sigma, h.n))
        return fail("alt: sigma is not a permutation of the vertices");
    if (alt_sigma(h, sigma).value != claimed)
        return fail("alt: sigma does not attain the claimed value");
    const json& je = field(witness, "exact");
    if (!je.is_boolean()) return fail("alt: \"exact\" must be a boolean");
    if (je.get<bool>()) {
        if (h.n > 8)
            throw CapExceeded("alt: exact recomputation needs at most 8 "
                              "vertices");
        if (alt_min_exact(h).value != claimed)
            return fail("alt: exact recomputation disagrees with the claimed "
                        "value");
    }
    return pass();
}

CheckOutcome check_nice(const json& params, const json& value,
                        const json& witness) {
    Hypergraph h = hypergraph_param(params);
    int chi = int_field(params, "chi");
    if (!value.is_boolean()) return fail("nice: value must be a boolean");
    if (chromatic_number(kneser_graph(h)).chi != chi)
        return fail("nice: the recorded chromatic number is wrong");
    if (value.get<bool>()) {
        std::vector<int> sigma = vertex_list(field(witness, "sigma"), "nice");
        if (!is_permutation(sigma, h.n))
            return fail("nice: sigma is not a permutation of the vertices");
        if (!is_nice_with(h, chi, sigma))
            return fail("nice: sigma does not witness niceness");
    } else if (kneser::check_nice(h, chi).nice) {
        return fail("nice: recomputation found a witnessing permutation");
    }
    return pass();
}

CheckOutcome check_xind(const json& params, const json& value,
                        const json& witness) {
    Graph g = graph_param(params);
    int lower = int_field(value, "lower"), upper = int_field(value, "upper");
    const json& je = field(value, "exact");
    if (!je.is_boolean()) return fail("xind: \"exact\" must be a boolean");
    HomK2 hom = hom_k2(g);
    LadderMap map;
    map.s = upper;
    const json& jl = field(witness, "labels");
    if (!jl.is_array() || int(jl.size()) != hom.poset.size)
        return fail("xind: witness must label every poset element");
    for (const auto& jv : jl) {
        if (!jv.is_number_integer()) return fail("xind: bad label");
        map.label.push_back(jv.get<int>());
    }
    if (!ladder_map_valid(hom.poset, map))
        return fail("xind: the witness map is not a valid ladder map");
    XindResult r = xind_exact(hom.poset);
    if (r.exact != je.get<bool>() || r.lower != lower || r.upper != upper)
        return fail("xind: recomputation disagrees with the claimed bracket");
    return pass();
}

CheckOutcome check_fan_count(const json& params, const json& value) {
    FanLabeling l = labeling_param(params);
    LabelingCheck lc = validate_labeling(l);
    if (!lc.ok) return fail("fan-count: invalid labeling: " + lc.reason);
    std::uint64_t claimed = field(value, "count").get<std::uint64_t>();
    bool odd = field(value, "odd").get<bool>();
    std::uint64_t count = count_negative_alternating_chains(l);
    if (count != claimed)
        return fail("fan-count: recount disagrees with the claimed count");
    if (odd != (count % 2 == 1))
        return fail("fan-count: the parity flag does not match the count");
    return pass();
}

CheckOutcome check_chen(const json& params, const json& witness) {
    FanLabeling l = labeling_param(params);
    int gamma = int_field(params, "gamma");
    auto [cp, n] = chain_pair_from_json(witness.dump());
    if (n != l.n)
        return fail("chen: witness dimension disagrees with the labeling");
    if (l.m != l.n)
        return fail("chen: labels must have magnitude at most n");
    if (!chain_pair_valid(l.n, l.label, gamma, cp))
        return fail("chen: the chain pair fails replay against the labeling");
    return pass();
}

CheckOutcome check_circuit(const json& params, const json& witness) {
    FanLabeling l = labeling_param(params);
    FanCircuit got = fan_symmetric_circuit(l);
    const json& jc = field(witness, "chains");
    if (!jc.is_array() || jc.size() != got.chains.size())
        return fail("circuit: recomputation yields a different circuit");
    for (std::size_t i = 0; i < got.chains.size(); ++i) {
        const json& jch = jc[i];
        if (!jch.is_array() || jch.size() != got.chains[i].size())
            return fail("circuit: recomputation yields a different circuit");
        for (std::size_t k = 0; k < got.chains[i].size(); ++k) {
            if (!jch[k].is_string() ||
                SignVector::parse(jch[k].get<std::string>()).n() != l.n ||
                sv_encode(SignVector::parse(jch[k].get<std::string>())) !=
                    got.chains[i][k])
                return fail("circuit: recomputation yields a different "
                            "circuit");
        }
    }
    return pass();
}

CheckOutcome check_zigzag(const json& params, const json& witness) {
    Graph g = graph_param(params);
    Coloring c = coloring_param(params);
    int t = int_field(params, "t");
    BipartiteState s = bipartite_state_from_json(witness.dump());
    if (!zigzag_valid(g, c, t, s))
        return fail("zigzag: the witness fails replay");
    return pass();
}

CheckOutcome check_klm(const json& params, const json& witness) {
    Graph g = graph_param(params);
    Coloring c = coloring_param(params);
    std::vector<int> I, J;
    for (const auto& jv : field(params, "i")) I.push_back(jv.get<int>());
    for (const auto& jv : field(params, "j")) J.push_back(jv.get<int>());
    BipartiteState s = bipartite_state_from_json(witness.dump());
    if (!colorful_klm_valid(g, c, I, J, s))
        return fail("klm: the witness fails replay");
    return pass();
}

CheckOutcome check_ktt(const json& params, const json& witness) {
    Graph g = graph_param(params);
    Coloring c = coloring_param(params);
    int t = int_field(params, "t");
    KttStarWitness w = ktt_star_from_json(witness.dump());
    if (w.t != t) return fail("ktt: witness t disagrees with the parameters");
    // Replay piecewise so a failure names the offending pair.
    if (int(w.a_side.size()) != t || int(w.b_side.size()) != t)
        return fail("ktt: each side must have t vertices");
    std::vector<int> all;
    for (const auto* side : {&w.a_side, &w.b_side})
        for (int v : *side) {
            if (v < 0 || v >= g.m) return fail("ktt: vertex out of range");
            all.push_back(v);
        }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        return fail("ktt: the 2t vertices are not distinct");
    for (int k = 0; k < t; ++k) {
        if (c.color[w.a_side[k]] != k + 1)
            return fail("ktt: vertex " + std::to_string(w.a_side[k] + 1) +
                        " does not have color " + std::to_string(k + 1));
        if (c.color[w.b_side[k]] != k + 1)
            return fail("ktt: vertex " + std::to_string(w.b_side[k] + 1) +
                        " does not have color " + std::to_string(k + 1));
    }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (i != j && !g.adjacent(w.a_side[i], w.b_side[j]))
                return fail("ktt: vertices " +
                            std::to_string(w.a_side[i] + 1) + " and " +
                            std::to_string(w.b_side[j] + 1) +
                            " are not adjacent");
    return pass();
}

CheckOutcome check_path(const json& params, const json& witness) {
    Graph g = graph_param(params);
    Coloring c = coloring_param(params);
    int t = int_field(params, "t");
    PathWitness w = path_witness_from_json(witness.dump());
    if (w.t != t) return fail("path: witness t disagrees with the parameters");
    if (!path_witness_valid(g, c, w))
        return fail("path: the witness fails replay");
    return pass();
}

TriStarPartition partition_from_json(const json& j) {
    TriStarPartition p;
    for (const auto& jt : field(j, "triangles")) {
        std::vector<int> tri = vertex_list(jt, "tristar triangle");
        if (tri.size() != 3)
            throw InvalidInput("tristar: a triangle needs three vertices");
        p.triangles.push_back({tri[0], tri[1], tri[2]});
    }
    for (const auto& js : field(j, "stars")) {
        int center = int_field(js, "center") - 1;
        std::vector<std::pair<int, int>> edges;
        for (const auto& je : field(js, "edges")) {
            std::vector<int> e = vertex_list(je, "tristar star edge");
            if (e.size() != 2)
                throw InvalidInput("tristar: a star edge needs two vertices");
            edges.push_back({e[0], e[1]});
        }
        p.stars.push_back({center, std::move(edges)});
    }
    return p;
}

CheckOutcome check_tristar(const json& params, const json& value,
                           const json& witness) {
    Graph g = graph_param(params);
    int parts = int_field(value, "parts");
    const json& jd = field(value, "disjoint_optimum");
    if (!jd.is_boolean())
        return fail("tristar: \"disjoint_optimum\" must be a boolean");
    TriStarPartition p = partition_from_json(witness);
    if (!partition_valid(g, p))
        return fail("tristar: the witness partition fails replay");
    if (p.parts() != parts)
        return fail("tristar: the witness does not have the claimed number "
                    "of parts");
    TriStarResult r = triangle_star_partitions(g);
    if (r.parts != parts)
        return fail("tristar: recomputation disagrees with the claimed "
                    "minimum");
    if (r.disjoint_optimum != jd.get<bool>())
        return fail("tristar: recomputation disagrees on the disjoint "
                    "triangle property");
    return pass();
}

CheckOutcome check_verify(const json& value) {
    long total = field(value, "total").get<long>();
    long failures = field(value, "failures").get<long>();
    if (total < 1) return fail("verify: empty campaign");
    if (failures != 0)
        return fail("verify: the report records " + std::to_string(failures) +
                    " failed colorings");
    return pass();
}

} // namespace

std::string make_certificate(const std::string& invariant,
                             const std::string& params_json,
                             const std::string& value_json,
                             const std::string& witness_json,
                             std::uint64_t seed) {
    json j;
    j["invariant"] = invariant;
    j["params"] = parse_json(params_json, "certificate params");
    j["value"] = parse_json(value_json, "certificate value");
    j["witness"] = parse_json(witness_json, "certificate witness");
    j["seed"] = seed;
    return j.dump();
}

CheckOutcome check_certificate(const std::string& envelope_json) {
    json j = parse_json(envelope_json, "certificate");
    if (!j.is_object()) throw InvalidInput("certificate: expected an object");
    const json& ji = field(j, "invariant");
    if (!ji.is_string())
        throw InvalidInput("certificate: \"invariant\" must be a string");
    std::string kind = ji.get<std::string>();
    const json& params = field(j, "params");
    const json& value = field(j, "value");
    const json& witness = field(j, "witness");

    if (kind == "chi") return check_chi(params, value, witness);
    if (kind == "chic") return check_chic(params, value, witness);
    if (kind == "cd2") return check_cd2(params, value, witness);
    if (kind == "alt") return check_alt(params, value, witness);
    if (kind == "nice") return check_nice(params, value, witness);
    if (kind == "xind") return check_xind(params, value, witness);
    if (kind == "fan-count") return check_fan_count(params, value);
    if (kind == "chen") return check_chen(params, witness);
    if (kind == "circuit") return check_circuit(params, witness);
    if (kind == "zigzag") return check_zigzag(params, witness);
    if (kind == "klm") return check_klm(params, witness);
    if (kind == "ktt") return check_ktt(params, witness);
    if (kind == "path") return check_path(params, witness);
    if (kind == "tristar") return check_tristar(params, value, witness);
    if (kind == "verify") return check_verify(value);
    throw InvalidInput("certificate: unknown invariant \"" + kind + "\"");
}

} // namespace kneser
